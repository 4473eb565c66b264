//! Finite checks of the identities, grouped into suites of cells.
//!
//! A cell is one identity at one parameter choice, compared exactly up to a
//! weight bound. Cells come out in a fixed order (suite, then `k`, `i`,
//! then identity), so a report depends only on its inputs.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bijections::{
    beta_closed_form, chi, chi_inv, phi, phi_inv, psi, psi_inv, BoundedPartition, DistinctPartition,
};
use crate::enumeration::{in_q_or_base, is_in_p, is_in_q, is_in_u, overpartitions, Class, CountTable, WTable};
use crate::error::{Error, Result};
use crate::marking::{gordon_mark, MarkedProfile};
use crate::scalar::Integrality;
use crate::series::hfunc::{h_recurrence_mismatch, j_relation_mismatches, w_series, A_MINUS_ONE};
use crate::series::multisum::{andrews_sum_side, sum_side_f, sum_side_g, sum_side_main, sum_side_q};
use crate::series::pochhammer::MonomialParam;
use crate::series::products::{
    andrews_product_side, euler_product, jacobi_bilateral, pentagonal_sum, product_side_c, rogers_ramanujan_product,
    rogers_ramanujan_sum, triple_product,
};
use crate::{ClassParams, Overpartition, QSeries, Rational, XqSeries};

/// A named group of cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    /// Difference condition against congruence condition, by enumeration.
    Thm14,
    /// The refined sum side against enumeration, `H` and `W`, and the F/G split.
    Thm16,
    /// The sum side at `x = 1` against the product side.
    Thm17,
    /// Enumerated relations among F, G and D, and the series recurrences.
    Recurrences,
    /// Round trips and images of the three bijections, and the Q closed form.
    Bijections,
    /// The ordinary-partition identities and classical sanity checks.
    Andrews,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Thm14,
        Suite::Thm16,
        Suite::Thm17,
        Suite::Recurrences,
        Suite::Bijections,
        Suite::Andrews,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Thm14 => "thm14",
            Suite::Thm16 => "thm16",
            Suite::Thm17 => "thm17",
            Suite::Recurrences => "recurrences",
            Suite::Bijections => "bijections",
            Suite::Andrews => "andrews",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown suite {s:?}")))
    }
}

/// The first place where two sides disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub n: u32,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One identity at one parameter choice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub suite: &'static str,
    pub identity: &'static str,
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<Vec<u32>>,
    pub n_max: u32,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Cell {
    fn new(suite: Suite, identity: &'static str, k: u32, i: Option<u32>, n_max: u32, witness: Option<Witness>) -> Self {
        Cell {
            suite: suite.name(),
            identity,
            k,
            i,
            profile: None,
            n_max,
            status: if witness.is_some() { Status::Fail } else { Status::Pass },
            witness,
        }
    }

    fn for_params(suite: Suite, identity: &'static str, p: ClassParams, n_max: u32, witness: Option<Witness>) -> Self {
        Cell::new(suite, identity, p.k(), Some(p.i()), n_max, witness)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("cells serialize")
    }
}

/// All cells of a run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub cells: Vec<Cell>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.cells.iter().all(Cell::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| !c.passed())
    }

    /// The closing JSON line.
    pub fn summary_line(&self, suite: Suite, k_max: u32, n_max: u32) -> String {
        serde_json::json!({
            "summary": suite.name(),
            "k_max": k_max,
            "n_max": n_max,
            "cells": self.cells.len(),
            "failed": self.failures().count(),
            "status": if self.passed() { "pass" } else { "fail" },
        })
        .to_string()
    }
}

/// Runs a suite for `2 <= k <= k_max`, handing each cell to `emit` as soon
/// as it is done.
pub fn run(suite: Suite, k_max: u32, n_max: u32, mut emit: impl FnMut(&Cell)) -> VerifyReport {
    let mut report = VerifyReport::default();
    let mut push = |c: Cell| {
        emit(&c);
        report.cells.push(c);
    };
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    for s in suites {
        match s {
            Suite::Thm14 => thm14(k_max, n_max).into_iter().for_each(&mut push),
            Suite::Thm16 => {
                for p in params(k_max) {
                    thm16(p, n_max).into_iter().for_each(&mut push);
                }
            }
            Suite::Thm17 => {
                for p in params(k_max) {
                    thm17(p, n_max).into_iter().for_each(&mut push);
                }
            }
            Suite::Recurrences => {
                for p in params(k_max) {
                    enumerated_relations(p, n_max).into_iter().for_each(&mut push);
                    series_recurrences(p, n_max).into_iter().for_each(&mut push);
                }
                for k in 2..=k_max {
                    push(j_relations(k, n_max));
                }
            }
            Suite::Bijections => {
                let corpus = Corpus::new(n_max);
                for p in params(k_max) {
                    push(phi_cell(p, &corpus));
                    push(psi_cell(p, &corpus));
                    push(chi_cell(p, &corpus));
                }
                let n1_max = 3;
                for p in params(k_max) {
                    q_closed_form(p, n1_max, &corpus).into_iter().for_each(&mut push);
                }
            }
            Suite::Andrews => {
                for p in params(k_max) {
                    andrews(p, n_max).into_iter().for_each(&mut push);
                }
                classical(n_max).into_iter().for_each(&mut push);
            }
            Suite::All => unreachable!("expanded above"),
        }
    }
    report
}

fn params(k_max: u32) -> impl Iterator<Item = ClassParams> {
    ClassParams::all_up_to(k_max)
}

fn rat(c: u64) -> Rational {
    Rational::from_integer(c.into())
}

fn witness(m: Option<u32>, n: u32, lhs: impl ToString, rhs: impl ToString) -> Option<Witness> {
    Some(Witness {
        m,
        n,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

fn q_vs_q(a: &QSeries, b: &QSeries) -> Option<Witness> {
    let n = a.first_difference(b)?;
    witness(None, n, a.coeff(n), b.coeff(n))
}

fn xq_vs_xq(a: &XqSeries, b: &XqSeries) -> Option<Witness> {
    let (m, n) = a.first_difference(b)?;
    let (mi, ni) = (i64::from(m), i64::from(n));
    witness(Some(m), n, a.coeff(mi, ni), b.coeff(mi, ni))
}

fn table_vs_table(a: &CountTable, b: &CountTable) -> Option<Witness> {
    let (m, n) = a.first_difference(b)?;
    witness(Some(m), n, a.get(m.into(), n.into()), b.get(m.into(), n.into()))
}

fn totals_vs_totals(a: &CountTable, b: &CountTable) -> Option<Witness> {
    let n = (0..=a.n_max()).find(|&n| a.total(n) != b.total(n))?;
    witness(None, n, a.total(n), b.total(n))
}

fn totals_vs_q(t: &CountTable, s: &QSeries) -> Option<Witness> {
    let n = (0..=t.n_max()).find(|&n| rat(t.total(n)) != s.coeff(n))?;
    witness(None, n, t.total(n), s.coeff(n))
}

/// Compares every `(m, n)` in the box, skipping the origin when asked.
fn table_vs_xq(t: &CountTable, s: &XqSeries, skip_origin: bool) -> Option<Witness> {
    for n in 0..=t.n_max().min(s.q_order()) {
        for m in 0..=s.x_order() {
            if skip_origin && (m, n) == (0, 0) {
                continue;
            }
            let (mi, ni) = (i64::from(m), i64::from(n));
            let c = t.get(mi, ni);
            if rat(c) != s.coeff(mi, ni) {
                return witness(Some(m), n, c, s.coeff(mi, ni));
            }
        }
    }
    None
}

fn non_integral(s: &QSeries) -> Option<Witness> {
    let n = (0..=s.order()).find(|&n| !s.coeff(n).is_integral())?;
    witness(None, n, s.coeff(n), "an integer")
}

/// `D = C` by enumeration, for every `(k, i)` with `k <= k_max`.
pub fn thm14(k_max: u32, n_max: u32) -> Vec<Cell> {
    let ps: Vec<ClassParams> = params(k_max).collect();
    let jobs: Vec<(Class, ClassParams)> = ps.iter().flat_map(|&p| [(Class::D, p), (Class::C, p)]).collect();
    let tables = CountTable::enumerate_many(&jobs, n_max);
    ps.iter()
        .zip(tables.chunks(2))
        .map(|(&p, t)| Cell::for_params(Suite::Thm14, "D(n) = C(n)", p, n_max, totals_vs_totals(&t[0], &t[1])))
        .collect()
}

/// The sum side at `x = 1` against the product side and against the
/// enumerated congruence class.
pub fn thm17(p: ClassParams, n_max: u32) -> Vec<Cell> {
    let sum = sum_side_main::<Rational>(p, n_max, n_max).at_x_one();
    let product = product_side_c::<Rational>(p, n_max);
    let c = CountTable::enumerate(Class::C, p, n_max);
    vec![
        Cell::for_params(
            Suite::Thm17,
            "sum side at x=1 is integral",
            p,
            n_max,
            non_integral(&sum),
        ),
        Cell::for_params(
            Suite::Thm17,
            "sum side at x=1 = product side",
            p,
            n_max,
            q_vs_q(&sum, &product),
        ),
        Cell::for_params(Suite::Thm17, "C(n) = product side", p, n_max, totals_vs_q(&c, &product)),
    ]
}

/// The refined identities: enumeration, sum side, `H(-1/q; xq)`, the `W`
/// recurrence, and the F/G split of the sum side.
pub fn thm16(p: ClassParams, n_max: u32) -> Vec<Cell> {
    let s = Suite::Thm16;
    let main = sum_side_main::<Rational>(p, n_max, n_max);
    let h = w_series::<Rational>(p, n_max, n_max);
    let tables = CountTable::enumerate_many(&[(Class::D, p), (Class::F, p), (Class::G, p)], n_max);
    let (d, f, g) = (&tables[0], &tables[1], &tables[2]);
    let w = WTable::new(p.k(), n_max);
    let w = CountTable::from_fn(n_max, |m, n| w.get(p.i().into(), m.into(), n.into()));
    let sum_f = sum_side_f::<Rational>(p, n_max, n_max);
    let sum_g = sum_side_g::<Rational>(p, n_max, n_max);
    let half = Rational::new(1.into(), 2.into());
    let halves = if sum_f.coeff(0, 0) == half && sum_g.coeff(0, 0) == half {
        None
    } else {
        witness(
            Some(0),
            0,
            format!("{} + {}", sum_f.coeff(0, 0), sum_g.coeff(0, 0)),
            "1/2 + 1/2",
        )
    };
    vec![
        Cell::for_params(s, "D(m,n) = sum side", p, n_max, table_vs_xq(d, &main, false)),
        Cell::for_params(s, "H(-1/q; xq) = sum side", p, n_max, xq_vs_xq(&h, &main)),
        Cell::for_params(s, "W(m,n) = D(m,n)", p, n_max, table_vs_table(&w, d)),
        Cell::for_params(s, "F(m,n) = F sum side", p, n_max, table_vs_xq(f, &sum_f, true)),
        Cell::for_params(s, "G(m,n) = G sum side", p, n_max, table_vs_xq(g, &sum_g, true)),
        Cell::for_params(
            s,
            "F sum side + G sum side = sum side",
            p,
            n_max,
            xq_vs_xq(&(&sum_f + &sum_g), &main),
        ),
        Cell::for_params(s, "F and G constant terms are 1/2", p, n_max, halves),
    ]
}

/// The enumerated relations: the two F/G shifts, the D recurrence and the
/// `W` recurrence against D.
pub fn enumerated_relations(p: ClassParams, n_max: u32) -> Vec<Cell> {
    let s = Suite::Recurrences;
    let (k, i) = (p.k(), p.i());
    let at = |ii: u32| ClassParams::new(k, ii).ok();
    let mut jobs = vec![(Class::D, p), (Class::G, p)];
    let lower = at(i - 1);
    let top = at(k).expect("i = k is valid");
    let mirror = at(k - i);
    let mirror_up = at(k - i + 1);
    jobs.extend(lower.map(|q| (Class::D, q)));
    jobs.extend(lower.map(|q| (Class::F, q)));
    jobs.push((Class::F, top));
    jobs.extend(mirror.map(|q| (Class::D, q)));
    jobs.extend(mirror_up.map(|q| (Class::D, q)));
    let mut tables = CountTable::enumerate_many(&jobs, n_max).into_iter();
    let d = tables.next().expect("D");
    let g = tables.next().expect("G");
    let d_lower = lower.map(|_| tables.next().expect("D lower"));
    let f_lower = lower.map(|_| tables.next().expect("F lower"));
    let f_top = tables.next().expect("F top");
    let d_mirror = mirror.map(|_| tables.next().expect("D mirror"));
    let d_mirror_up = mirror_up.map(|_| tables.next().expect("D mirror up"));
    let zero = CountTable::zeros(n_max);

    let mut cells = Vec::new();
    let shift = match &f_lower {
        Some(fl) => table_vs_table(fl, &g),
        None => {
            let shifted = CountTable::from_fn(n_max, |m, n| f_top.get(m.into(), i64::from(n) - i64::from(m)));
            table_vs_table(&g, &shifted)
        }
    };
    cells.push(Cell::for_params(
        s,
        if i >= 2 {
            "F_{k,i-1}(m,n) = G_{k,i}(m,n)"
        } else {
            "G_{k,1}(m,n) = F_{k,k}(m,n-m)"
        },
        p,
        n_max,
        shift,
    ));
    let d_lower = d_lower.unwrap_or_else(|| zero.clone());
    let d_mirror = d_mirror.unwrap_or_else(|| zero.clone());
    let d_mirror_up = d_mirror_up.unwrap_or_else(|| zero.clone());
    let ii = i64::from(i);
    let lhs = CountTable::from_fn(n_max, |m, n| {
        d.get(m.into(), n.into()) - d_lower.get(m.into(), n.into())
    });
    let rhs = CountTable::from_fn(n_max, |m, n| {
        let (m, n) = (i64::from(m), i64::from(n));
        d_mirror.get(m - ii, n - m) + d_mirror_up.get(m - ii + 1, n - m)
    });
    cells.push(Cell::for_params(
        s,
        "D recurrence",
        p,
        n_max,
        table_vs_table(&lhs, &rhs),
    ));
    let w = WTable::new(k, n_max);
    let w = CountTable::from_fn(n_max, |m, n| w.get(i.into(), m.into(), n.into()));
    cells.push(Cell::for_params(s, "W(m,n) = D(m,n)", p, n_max, table_vs_table(&w, &d)));
    cells
}

/// The `H` recurrence at `a = -1/q, x -> xq` (the `W` form) and at
/// `a = -1` with formal `x`.
pub fn series_recurrences(p: ClassParams, n_max: u32) -> Vec<Cell> {
    let s = Suite::Recurrences;
    let check = |a, x| match h_recurrence_mismatch::<Rational>(p, a, x, n_max, n_max) {
        Ok(None) => None,
        Ok(Some((m, n))) => witness(Some(m), n, "lhs", "rhs"),
        Err(e) => witness(None, 0, e, "supported instantiation"),
    };
    vec![
        Cell::for_params(
            s,
            "W recurrence",
            p,
            n_max,
            check(crate::series::hfunc::A_MINUS_ONE_OVER_Q, MonomialParam::x_times_q(1)),
        ),
        Cell::for_params(
            s,
            "H recurrence at a=-1",
            p,
            n_max,
            check(A_MINUS_ONE, MonomialParam::x_times_q(0)),
        ),
    ]
}

/// The two relations between `J` and `H` at one `k`.
pub fn j_relations(k: u32, n_max: u32) -> Cell {
    let w = match j_relation_mismatches::<Rational>(k, n_max) {
        Ok(bad) => bad
            .first()
            .and_then(|b| witness(Some(b.at.0), b.at.1, b.relation, "equal")),
        Err(e) => witness(None, 0, e, "supported instantiation"),
    };
    Cell::new(Suite::Recurrences, "J relations", k, None, n_max, w)
}

/// Every overpartition of weight at most `n_max`, lightest first.
#[derive(Debug, Clone)]
pub struct Corpus {
    n_max: u32,
    all: Vec<Overpartition>,
}

impl Corpus {
    pub fn new(n_max: u32) -> Self {
        Corpus {
            n_max,
            all: (0..=n_max).flat_map(overpartitions).collect(),
        }
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    fn u_class(&self, p: ClassParams) -> impl Iterator<Item = &Overpartition> {
        self.all.iter().filter(move |l| is_in_u(l, p))
    }

    fn p_class(&self, p: ClassParams) -> impl Iterator<Item = &Overpartition> {
        self.u_class(p).filter(move |l| is_in_p(l, p).unwrap_or(false))
    }

    fn q_class(&self, p: ClassParams) -> impl Iterator<Item = &Overpartition> {
        self.u_class(p).filter(move |l| is_in_q(l, p).unwrap_or(false))
    }
}

fn profile(lambda: &Overpartition, p: ClassParams) -> MarkedProfile {
    gordon_mark(lambda)
        .profile(p.k())
        .expect("class members have marks below k")
}

fn distinct_below(bound: u32, weight_max: u64) -> Vec<DistinctPartition> {
    fn go(largest: u32, room: u64, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(acc.clone());
        for v in (1..largest).rev() {
            if u64::from(v) <= room {
                acc.push(v);
                go(v, room - u64::from(v), acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(bound, weight_max, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|v| DistinctPartition::new(v).expect("built strictly decreasing"))
        .collect()
}

fn at_most_parts(len: u32, weight_max: u64) -> Vec<BoundedPartition> {
    fn go(largest: u64, len: u32, room: u64, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(acc.clone());
        if len == 0 {
            return;
        }
        for v in (1..=largest.min(room)).rev() {
            acc.push(v as u32);
            go(v, len - 1, room - v, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(weight_max, len, weight_max, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|v| BoundedPartition::new(v).expect("positive parts"))
        .collect()
}

fn failed(lambda: &Overpartition, what: impl ToString) -> Option<Witness> {
    witness(None, lambda.weight() as u32, lambda, what)
}

fn image_mismatch<T: std::hash::Hash + Eq + fmt::Debug>(
    image: &HashSet<T>,
    codomain: &HashSet<T>,
    n_max: u32,
) -> Option<Witness> {
    if image == codomain {
        return None;
    }
    let missing = codomain.difference(image).count();
    let extra = image.difference(codomain).count();
    witness(
        None,
        n_max,
        format!("image {} ({extra} outside)", image.len()),
        format!("codomain {} ({missing} missed)", codomain.len()),
    )
}

/// `phi` on every U-class member: inverse, closed form for `β`, ledger,
/// and image against all admissible `(α, β)`.
pub fn phi_cell(p: ClassParams, corpus: &Corpus) -> Cell {
    let n_max = corpus.n_max();
    let mut image = HashSet::new();
    let mut domain = 0usize;
    let mut bad = None;
    for lambda in corpus.u_class(p) {
        domain += 1;
        let out = match phi(lambda, p) {
            Ok(out) => out,
            Err(e) => {
                bad = failed(lambda, e);
                break;
            }
        };
        if out.beta != beta_closed_form(lambda) {
            bad = failed(lambda, format!("beta {} differs from closed form", out.beta));
        } else if lambda.weight() != out.alpha.weight() + out.beta.weight()
            || profile(lambda, p) != profile(&out.alpha, p)
        {
            bad = failed(lambda, "weight or profile ledger");
        } else if phi_inv(&out.alpha, &out.beta, p).ok().as_ref() != Some(lambda) {
            bad = failed(lambda, "inverse does not return the input");
        }
        if bad.is_some() {
            break;
        }
        image.insert((out.alpha, out.beta));
    }
    if bad.is_none() && image.len() != domain {
        bad = witness(
            None,
            n_max,
            format!("{} images", image.len()),
            format!("{domain} inputs"),
        );
    }
    if bad.is_none() {
        let mut codomain = HashSet::new();
        for alpha in corpus.p_class(p) {
            let n1 = profile(alpha, p).n1();
            for beta in distinct_below(n1, u64::from(n_max) - alpha.weight()) {
                codomain.insert((alpha.clone(), beta));
            }
        }
        bad = image_mismatch(&image, &codomain, n_max);
    }
    Cell::for_params(Suite::Bijections, "phi", p, n_max, bad)
}

/// `psi` on every P-class member, with the image against all admissible
/// `(γ, δ)`.
pub fn psi_cell(p: ClassParams, corpus: &Corpus) -> Cell {
    let n_max = corpus.n_max();
    let mut image = HashSet::new();
    let mut domain = 0usize;
    let mut bad = None;
    for alpha in corpus.p_class(p) {
        domain += 1;
        let out = match psi(alpha, p) {
            Ok(out) => out,
            Err(e) => {
                bad = failed(alpha, e);
                break;
            }
        };
        if alpha.weight() != out.gamma.weight() + out.delta.weight() || profile(alpha, p) != profile(&out.gamma, p) {
            bad = failed(alpha, "weight or profile ledger");
        } else if psi_inv(&out.gamma, &out.delta, p).ok().as_ref() != Some(alpha) {
            bad = failed(alpha, "inverse does not return the input");
        }
        if bad.is_some() {
            break;
        }
        image.insert((out.gamma, out.delta));
    }
    if bad.is_none() && image.len() != domain {
        bad = witness(
            None,
            n_max,
            format!("{} images", image.len()),
            format!("{domain} inputs"),
        );
    }
    if bad.is_none() {
        let mut codomain = HashSet::new();
        for gamma in corpus.q_class(p) {
            let top = profile(gamma, p).top();
            for delta in at_most_parts(top, u64::from(n_max) - gamma.weight()) {
                codomain.insert((gamma.clone(), delta));
            }
        }
        bad = image_mismatch(&image, &codomain, n_max);
    }
    Cell::for_params(Suite::Bijections, "psi", p, n_max, bad)
}

/// `chi` on every Q-class member with a nonempty top row; the image is
/// compared with every Q-class member (or the empty overpartition) whose
/// preimage weight stays within the bound.
pub fn chi_cell(p: ClassParams, corpus: &Corpus) -> Cell {
    let n_max = corpus.n_max();
    let mut image = HashSet::new();
    let mut domain = 0usize;
    let mut bad = None;
    for gamma in corpus.q_class(p) {
        let prof = profile(gamma, p);
        if prof.top() == 0 {
            continue;
        }
        domain += 1;
        let mu = match chi(gamma, p) {
            Ok(mu) => mu,
            Err(e) => {
                bad = failed(gamma, e);
                break;
            }
        };
        let delta = gamma.weight() as i64 - mu.weight() as i64;
        if delta != prof.chi_delta(p) || Some(profile(&mu, p)) != prof.shifted(-1) {
            bad = failed(gamma, format!("weight drop {delta} or profile"));
        } else if chi_inv(&mu, p).ok().as_ref() != Some(gamma) {
            bad = failed(gamma, "inverse does not return the input");
        }
        if bad.is_some() {
            break;
        }
        image.insert(mu);
    }
    if bad.is_none() && image.len() != domain {
        bad = witness(
            None,
            n_max,
            format!("{} images", image.len()),
            format!("{domain} inputs"),
        );
    }
    if bad.is_none() {
        let codomain: HashSet<Overpartition> = corpus
            .all
            .iter()
            .filter(|mu| in_q_or_base(mu, p))
            .filter(|mu| {
                let up = profile(mu, p).shifted(1).expect("adding one");
                mu.weight() as i64 + up.chi_delta(p) <= i64::from(n_max)
            })
            .cloned()
            .collect();
        bad = image_mismatch(&image, &codomain, n_max);
    }
    Cell::for_params(Suite::Bijections, "chi", p, n_max, bad)
}

/// The closed form for each profile with `N_1 <= n1_max` against the
/// enumerated Q-class.
pub fn q_closed_form(p: ClassParams, n1_max: u32, corpus: &Corpus) -> Vec<Cell> {
    let n_max = corpus.n_max();
    let profiles = MarkedProfile::all(p.k(), n1_max);
    let mut counts = vec![vec![0u64; n_max as usize + 1]; profiles.len()];
    for lambda in corpus.all.iter().filter(|l| in_q_or_base(l, p)) {
        let prof = profile(lambda, p);
        if let Some(slot) = profiles.iter().position(|x| *x == prof) {
            counts[slot][lambda.weight() as usize] += 1;
        }
    }
    profiles
        .iter()
        .zip(&counts)
        .map(|(prof, row)| {
            let series = sum_side_q::<Rational>(prof, p, n_max);
            let bad = (0..=n_max)
                .find(|&n| rat(row[n as usize]) != series.coeff(n))
                .and_then(|n| witness(None, n, row[n as usize], series.coeff(n)));
            let mut cell = Cell::for_params(Suite::Bijections, "Q(n) = closed form", p, n_max, bad);
            cell.profile = Some(prof.counts().to_vec());
            cell
        })
        .collect()
}

/// The ordinary-partition sum side against its product and against
/// enumeration, and the triple product.
pub fn andrews(p: ClassParams, n_max: u32) -> Vec<Cell> {
    let s = Suite::Andrews;
    let sum = andrews_sum_side::<Rational>(p, n_max, n_max);
    let product = andrews_product_side::<Rational>(p, n_max);
    let b = CountTable::enumerate(Class::B, p, n_max);
    let modulus = 2 * p.k();
    vec![
        Cell::for_params(
            s,
            "Andrews sum at x=1 = product",
            p,
            n_max,
            q_vs_q(&sum.at_x_one(), &product),
        ),
        Cell::for_params(s, "B(m,n) = Andrews sum", p, n_max, table_vs_xq(&b, &sum, false)),
        Cell::for_params(
            s,
            "Jacobi triple product",
            p,
            n_max,
            q_vs_q(&jacobi_bilateral(p, n_max), &triple_product(p.i(), modulus, n_max)),
        ),
    ]
}

/// Rogers-Ramanujan and the pentagonal expansion.
pub fn classical(n_max: u32) -> Vec<Cell> {
    let s = Suite::Andrews;
    vec![
        Cell::new(
            s,
            "sum q^(n^2+n)/(q)_n = 1/(q^2,q^3;q^5)",
            2,
            Some(1),
            n_max,
            q_vs_q(&rogers_ramanujan_sum(1, n_max), &rogers_ramanujan_product(2, n_max)),
        ),
        Cell::new(
            s,
            "sum q^(n^2)/(q)_n = 1/(q,q^4;q^5)",
            2,
            Some(2),
            n_max,
            q_vs_q(&rogers_ramanujan_sum(0, n_max), &rogers_ramanujan_product(1, n_max)),
        ),
        Cell::new(
            s,
            "pentagonal expansion of (q;q)",
            1,
            None,
            n_max,
            q_vs_q(&euler_product(n_max), &pentagonal_sum(n_max)),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_parse() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("thm99".parse::<Suite>().is_err());
    }

    #[test]
    fn empty_range_passes() {
        for s in Suite::EACH {
            let report = run(s, 3, 0, |_| {});
            assert!(report.passed(), "{s}");
        }
        assert!(run(Suite::All, 1, 5, |_| {}).cells.iter().all(|c| c.k == 2 || c.k == 1));
    }

    #[test]
    fn small_runs_pass() {
        for s in Suite::EACH {
            let report = run(s, 4, 12, |_| {});
            let bad: Vec<String> = report.failures().map(Cell::to_json_line).collect();
            assert!(bad.is_empty(), "{bad:?}");
        }
    }

    #[test]
    fn failing_cell_reports_witness() {
        let a = QSeries::one(4);
        let b = QSeries::monomial(Rational::from_integer(1.into()), 3, 4);
        let c = Cell::new(Suite::Andrews, "demo", 2, None, 4, q_vs_q(&a, &b));
        assert_eq!(
            c.to_json_line(),
            r#"{"suite":"andrews","identity":"demo","k":2,"n_max":4,"status":"fail","witness":{"n":0,"lhs":"1","rhs":"0"}}"#
        );
    }

    #[test]
    fn auxiliary_generators() {
        let d = distinct_below(4, 5);
        let w: Vec<String> = d.iter().map(|x| x.to_string()).collect();
        assert_eq!(w, ["", "3", "3,2", "3,1", "2", "2,1", "1"]);
        assert_eq!(at_most_parts(2, 3).len(), 6);
    }
}

//! The map `chi`, which removes one part from every row of a Q-class member.
//!
//! Forward: the originally 1-marked parts are visited from largest to
//! smallest. For the current value `t` of each, take the smallest mark
//! shared by the values `t-1` and `t`, or the largest mark on `t` when no
//! mark is shared, and raise that part of value `t` to `t+1`. Then the
//! smallest part of every row is dropped and 2 is subtracted from the rest.
//!
//! Inverse: add 2 to every part, put back a bottom column (`2̄` and 2's when
//! `i' = 1`; otherwise `1̄`, 1's on marks `2..i'-1` and 2's on marks
//! `i'..k-1`), then visit the 1-marked parts from smallest to largest: a part
//! `t` drops to `t-1` when `t+1` is absent or overlined; otherwise the
//! lowest-marked `t+1` drops to `t`.
//!
//! Here `i' = min(i, k-1)`. Marks travel with the parts; the intermediate
//! states need not be Gordon markings.

use super::{profile_of, Board};
use crate::enumeration::{in_q_or_base, is_in_q, is_in_u};
use crate::error::{Error, Result};
use crate::marking::{gordon_mark, MarkedPart};
use crate::overpartition::{ClassParams, Overpartition, Part};

pub fn chi(gamma: &Overpartition, p: ClassParams) -> Result<Overpartition> {
    let k = p.k();
    if !is_in_u(gamma, p) || !is_in_q(gamma, p)? {
        return Err(Error::domain(
            "Q-class membership",
            format!("{gamma} is not in the Q-class for {p}"),
        ));
    }
    let profile = profile_of(gamma, p)?;
    if profile.top() == 0 {
        return Err(Error::domain(
            "chi needs N_{k-1} > 0",
            format!("{gamma} has no (k-1)-marked part"),
        ));
    }
    let mut b = Board::new(gamma);
    let ones = b.row(1);
    for &e in ones.iter().rev() {
        let t = b.value(e);
        let below = b.marks_of_value(t - 1);
        let here = b.marks_of_value(t);
        let r = here
            .iter()
            .copied()
            .filter(|m| below.contains(m))
            .min()
            .or_else(|| here.iter().copied().max())
            .expect("value t is present");
        let j = b
            .with_value(t)
            .find(|&j| b.mark(j) == r)
            .expect("mark taken from this value");
        b.set_value(j, t + 1);
    }
    let mut drop = Vec::with_capacity((k - 1) as usize);
    for r in 1..k {
        let mut best: Option<usize> = None;
        for j in b.with_mark(r) {
            if best.is_none_or(|c| b.part(j) < b.part(c)) {
                best = Some(j);
            }
        }
        drop.push(best.expect("every row is nonempty"));
    }
    let mut cells: Vec<MarkedPart> = Vec::with_capacity(b.cells.len());
    for (j, c) in b.cells.iter().enumerate() {
        if drop.contains(&j) {
            continue;
        }
        if c.part.value <= 2 {
            return Err(Error::domain(
                "chi leaves only parts above 2 after dropping a column",
                format!("{gamma}"),
            ));
        }
        let mut c = *c;
        c.part.value -= 2;
        cells.push(c);
    }
    let out = Board { cells }.finish("chi")?;
    debug_assert_eq!(gamma.weight() as i64 - out.weight() as i64, profile.chi_delta(p));
    debug_assert!(in_q_or_base(&out, p));
    Ok(out)
}

pub fn chi_inv(mu: &Overpartition, p: ClassParams) -> Result<Overpartition> {
    let k = p.k();
    let ip = p.i_capped();
    if !in_q_or_base(mu, p) {
        return Err(Error::domain(
            "Q-class membership",
            format!("{mu} is not in the Q-class for {p}"),
        ));
    }
    let profile = profile_of(mu, p)?;
    let mut cells: Vec<MarkedPart> = gordon_mark(mu)
        .entries()
        .iter()
        .map(|e| MarkedPart {
            part: Part::new(e.part.value + 2, e.part.overlined),
            mark: e.mark,
        })
        .collect();
    let cell = |part: Part, mark: u32| MarkedPart { part, mark };
    if ip == 1 {
        cells.push(cell(Part::bar(2), 1));
        cells.extend((2..k).map(|r| cell(Part::plain(2), r)));
    } else {
        cells.push(cell(Part::bar(1), 1));
        cells.extend((2..ip).map(|r| cell(Part::plain(1), r)));
        cells.extend((ip..k).map(|r| cell(Part::plain(2), r)));
    }
    let mut b = Board { cells };
    for e in b.row(1) {
        let t = b.value(e);
        if b.has_part(Part::bar(t + 1)) || !b.has_value(t + 1) {
            b.set_value(e, t - 1);
        } else {
            let j = b
                .with_value(t + 1)
                .min_by_key(|&j| b.mark(j))
                .expect("value t+1 is present");
            b.set_value(j, t);
        }
    }
    let out = b.finish("inverse chi")?;
    let bigger = profile.shifted(1).expect("adding one never underflows");
    debug_assert_eq!(profile_of(&out, p)?, bigger);
    debug_assert_eq!(out.weight() as i64 - mu.weight() as i64, bigger.chi_delta(p));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(s: &str) -> Overpartition {
        s.parse().unwrap()
    }

    #[test]
    fn base_column_goes_to_empty() {
        for p in ClassParams::all_up_to(5) {
            let base = chi_inv(&Overpartition::empty(), p).unwrap();
            let profile = profile_of(&base, p).unwrap();
            assert!(profile.counts().iter().all(|&c| c == 1), "{p}");
            assert!(is_in_q(&base, p).unwrap());
            assert_eq!(chi(&base, p).unwrap(), Overpartition::empty());
            assert_eq!(base.weight() as i64, profile.chi_delta(p));
        }
        let p = ClassParams::new(3, 2).unwrap();
        assert_eq!(chi_inv(&Overpartition::empty(), p).unwrap(), op("1,1~"));
    }

    #[test]
    fn delta_for_profile_two_one() {
        let p = ClassParams::new(3, 1).unwrap();
        let mut seen = 0;
        for n in 0..=12 {
            for gamma in crate::enumeration::overpartitions(n) {
                if !is_in_u(&gamma, p) || !is_in_q(&gamma, p).unwrap() {
                    continue;
                }
                if profile_of(&gamma, p).unwrap().counts() != [2, 1] {
                    continue;
                }
                let mu = chi(&gamma, p).unwrap();
                assert_eq!(gamma.weight() - mu.weight(), 4, "{gamma}");
                assert_eq!(chi_inv(&mu, p).unwrap(), gamma);
                seen += 1;
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn chi_needs_top_row() {
        let p = ClassParams::new(3, 1).unwrap();
        let gamma = op("1~");
        assert!(is_in_q(&gamma, p).unwrap());
        assert!(matches!(chi(&gamma, p), Err(Error::Domain { .. })));
    }
}

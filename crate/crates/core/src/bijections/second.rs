//! Second reduction and dilation, and the map `psi`.
//!
//! Both moves are anchored at a part of the `(k-1)`-marked row, given by its
//! 0-based position `s` in increasing order. With `t` the value of that part:
//!
//! - reduction, when `t >= 2` and the value `t-1` is absent: `t̄` becomes the
//!   overlined `t-1`;
//! - reduction, when `t-1` is present and `f_{t-2} + f̄_{t-2} + f_{t-1}` is
//!   below `k-1` (below `min(i,k-1) - 1` when `t = 2`): the `r`-marked `t`
//!   becomes `t-1` for the smallest `r` in `2..k-1` whose rows up to `r`
//!   carry fewer than `r` of those parts;
//! - dilation, when `f_t + f̄_t + f_{t+1} < k-1`: the highest-marked part of
//!   value `t-1` becomes `t`; otherwise, when the same holds at `t+1`, the
//!   anchor itself becomes `t+1`.

use serde::{Deserialize, Serialize};

use super::{profile_of, Board, BoundedPartition};
use crate::enumeration::{is_in_p, is_in_q, is_in_u};
use crate::error::{Error, Result};
use crate::overpartition::{ClassParams, Overpartition};

fn require_p(lambda: &Overpartition, p: ClassParams) -> Result<()> {
    if is_in_u(lambda, p) && is_in_p(lambda, p)? {
        Ok(())
    } else {
        Err(Error::domain(
            "P-class membership",
            format!("{lambda} is not in the P-class for {p}"),
        ))
    }
}

/// `f_{t-2} + f̄_{t-2} + f_{t-1}`, counting only rows `<= row_max`.
fn load_below(b: &Board, t: u32, row_max: u32) -> u32 {
    b.indices()
        .filter(|&j| b.mark(j) <= row_max)
        .filter(|&j| {
            let v = b.value(j);
            (t >= 2 && v == t - 2) || (v + 1 == t && !b.overlined(j))
        })
        .count() as u32
}

/// `f_t + f̄_t + f_{t+1}`
fn load_at(b: &Board, t: u32) -> u32 {
    b.indices()
        .filter(|&j| b.value(j) == t || (b.value(j) == t + 1 && !b.overlined(j)))
        .count() as u32
}

/// The cell a reduction at anchor `s` would lower, if any.
fn reduction_target(b: &Board, p: ClassParams, s: usize) -> Option<usize> {
    let k = p.k();
    let anchor = *b.row(k - 1).get(s)?;
    let t = b.value(anchor);
    if t < 2 {
        return None;
    }
    if !b.has_value(t - 1) {
        return b.with_value(t).find(|&j| b.overlined(j));
    }
    let cap = if t == 2 { p.i_capped() - 1 } else { k - 1 };
    if load_below(b, t, u32::MAX) >= cap {
        return None;
    }
    (2..k).find_map(|r| {
        let cell = b.with_value(t).find(|&j| b.mark(j) == r)?;
        (load_below(b, t, r) < r).then_some(cell)
    })
}

fn reducible_at(lambda: &Overpartition, p: ClassParams, s: usize) -> bool {
    reduction_target(&Board::new(lambda), p, s).is_some()
}

/// Second reduction anchored at the `s`-th `(k-1)`-marked part.
pub fn second_reduction_at(lambda: &Overpartition, p: ClassParams, s: usize) -> Result<Overpartition> {
    require_p(lambda, p)?;
    let mut b = Board::new(lambda);
    let target = reduction_target(&b, p, s).ok_or_else(|| {
        Error::domain(
            "second reduction: neither the missing t-1 case nor the row-load case applies",
            format!("anchor {s} of {lambda}"),
        )
    })?;
    let v = b.value(target);
    b.set_value(target, v - 1);
    let out = b.finish("second reduction")?;
    debug_assert_eq!(out.weight() + 1, lambda.weight());
    debug_assert_eq!(profile_of(&out, p)?, profile_of(lambda, p)?);
    debug_assert!(is_in_p(&out, p)?);
    Ok(out)
}

/// Second reduction at the smallest anchor where it applies.
pub fn second_reduction(lambda: &Overpartition, p: ClassParams) -> Result<Overpartition> {
    require_p(lambda, p)?;
    let top = profile_of(lambda, p)?.top() as usize;
    let s = (0..top).find(|&s| reducible_at(lambda, p, s)).ok_or_else(|| {
        Error::domain(
            "second reduction needs a qualifying (k-1)-marked part",
            format!("{lambda} is fixed for {p}"),
        )
    })?;
    second_reduction_at(lambda, p, s)
}

/// Second dilation anchored at the `s`-th `(k-1)`-marked part.
pub fn second_dilation(lambda: &Overpartition, p: ClassParams, s: usize) -> Result<Overpartition> {
    require_p(lambda, p)?;
    let k = p.k();
    let mut b = Board::new(lambda);
    let anchor = *b.row(k - 1).get(s).ok_or_else(|| {
        Error::domain(
            "second dilation anchor exists",
            format!("no (k-1)-marked part number {s}"),
        )
    })?;
    let t = b.value(anchor);
    if load_at(&b, t) < k - 1 {
        let lower = b
            .with_value(t.wrapping_sub(1))
            .max_by_key(|&j| b.mark(j))
            .ok_or_else(|| {
                Error::domain(
                    "second dilation needs a part t-1 when the load at t is below k-1",
                    format!("anchor {s} of {lambda}"),
                )
            })?;
        b.set_value(lower, t);
    } else if load_at(&b, t + 1) < k - 1 {
        b.set_value(anchor, t + 1);
        if k == 2 {
            b.set_overlined(anchor, true);
        }
    } else {
        return Err(Error::domain(
            "second dilation needs a load below k-1 at t or t+1",
            format!("anchor {s} of {lambda}"),
        ));
    }
    let out = b.finish("second dilation")?;
    debug_assert_eq!(out.weight(), lambda.weight() + 1);
    debug_assert_eq!(profile_of(&out, p)?, profile_of(lambda, p)?);
    Ok(out)
}

/// Output of [`psi`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PsiOutput {
    pub gamma: Overpartition,
    pub delta: BoundedPartition,
}

/// Visits the `(k-1)`-marked parts from smallest to largest and reduces at
/// each while possible; the numbers of reductions form `δ`.
pub fn psi(alpha: &Overpartition, p: ClassParams) -> Result<PsiOutput> {
    psi_traced(alpha, p).map(|(out, _)| out)
}

/// [`psi`] together with every intermediate overpartition.
pub fn psi_traced(alpha: &Overpartition, p: ClassParams) -> Result<(PsiOutput, Vec<Overpartition>)> {
    require_p(alpha, p)?;
    let top = profile_of(alpha, p)?.top() as usize;
    let mut cur = alpha.clone();
    let mut trace = vec![cur.clone()];
    let mut counts = Vec::with_capacity(top);
    for s in 0..top {
        let mut c = 0;
        while reducible_at(&cur, p, s) {
            cur = second_reduction_at(&cur, p, s)?;
            trace.push(cur.clone());
            c += 1;
        }
        counts.push(c);
    }
    debug_assert!(counts.windows(2).all(|w| w[0] <= w[1]));
    let out = PsiOutput {
        gamma: cur,
        delta: BoundedPartition::new(counts.into_iter().filter(|&c| c > 0).collect())?,
    };
    debug_assert_eq!(alpha.weight(), out.gamma.weight() + out.delta.weight());
    debug_assert!(is_in_q(&out.gamma, p)?);
    Ok((out, trace))
}

/// Inverse of [`psi`]: the `t`-th largest part of `δ` is undone by that many
/// dilations at the `t`-th largest `(k-1)`-marked part.
pub fn psi_inv(gamma: &Overpartition, delta: &BoundedPartition, p: ClassParams) -> Result<Overpartition> {
    psi_inv_traced(gamma, delta, p).map(|(out, _)| out)
}

/// [`psi_inv`] together with every intermediate overpartition.
pub fn psi_inv_traced(
    gamma: &Overpartition,
    delta: &BoundedPartition,
    p: ClassParams,
) -> Result<(Overpartition, Vec<Overpartition>)> {
    if !is_in_u(gamma, p) || !is_in_q(gamma, p)? {
        return Err(Error::domain(
            "Q-class membership",
            format!("{gamma} is not in the Q-class for {p}"),
        ));
    }
    let top = profile_of(gamma, p)?.top() as usize;
    if delta.len() > top {
        return Err(Error::domain(
            "partition has at most N_{k-1} parts",
            format!("{} parts but N_{{k-1}} = {top}", delta.len()),
        ));
    }
    let mut cur = gamma.clone();
    let mut trace = vec![cur.clone()];
    for (t, &d) in delta.parts().iter().enumerate() {
        for _ in 0..d {
            cur = second_dilation(&cur, p, top - 1 - t)?;
            trace.push(cur.clone());
        }
    }
    debug_assert_eq!(cur.weight(), gamma.weight() + delta.weight());
    Ok((cur, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gordon_mark;

    fn op(s: &str) -> Overpartition {
        s.parse().unwrap()
    }

    fn row(lambda: &Overpartition, r: u32) -> String {
        let parts: Vec<String> = gordon_mark(lambda).row(r).iter().map(|p| p.to_string()).collect();
        parts.join(" ")
    }

    #[test]
    fn two_reductions_from_126() {
        let p = ClassParams::new(4, 1).unwrap();
        let alpha = op("13~,12,12,11~,10,10~,8,8,7~,6,6,6~,4,4,4~,2,2,1~");
        assert_eq!(alpha.weight(), 126);
        let once = second_reduction(&alpha, p).unwrap();
        assert_eq!(once, second_reduction_at(&alpha, p, 1).unwrap());
        assert_eq!(once.weight(), 125);
        assert_eq!(row(&once, 1), "1~ 3~ 6~ 7~ 10~ 11~ 13~");
        let twice = second_reduction(&once, p).unwrap();
        assert_eq!(twice.weight(), 124);
        assert_eq!(row(&twice, 2), "2 3 6 8 10 12");
        assert_eq!(second_dilation(&twice, p, 1).unwrap(), once);
        assert_eq!(second_dilation(&once, p, 1).unwrap(), alpha);
    }

    #[test]
    fn psi_of_128() {
        let p = ClassParams::new(4, 1).unwrap();
        let alpha = op("2~ 4~ 6~ 7~ 10~ 11~ 13~ 2 4 6 8 10 12 2 5 6 8 12");
        assert_eq!(alpha.weight(), 128);
        let out = psi(&alpha, p).unwrap();
        assert_eq!(out.delta.parts(), &[7, 3, 3, 3, 1]);
        assert_eq!(out.gamma.weight(), 111);
        assert_eq!(row(&out.gamma, 1), "1~ 3~ 5~ 6~ 8~ 11~ 13~");
        assert_eq!(row(&out.gamma, 2), "2 3 5 7 8 12");
        assert_eq!(row(&out.gamma, 3), "2 4 5 7 9");
        assert!(is_in_q(&out.gamma, p).unwrap());
        assert_eq!(psi_inv(&out.gamma, &out.delta, p).unwrap(), alpha);
    }

    #[test]
    fn q_members_are_fixed() {
        let p = ClassParams::new(3, 2).unwrap();
        let gamma = op("1,1~");
        assert!(is_in_q(&gamma, p).unwrap());
        assert!(second_reduction(&gamma, p).is_err());
        let out = psi(&gamma, p).unwrap();
        assert!(out.delta.is_empty());
        let long = BoundedPartition::new(vec![1, 1]).unwrap();
        assert!(psi_inv(&gamma, &long, p).is_err());
    }
}

//! First reduction and dilation, and the map `phi`.

use serde::{Deserialize, Serialize};

use super::{profile_of, Board, DistinctPartition};
use crate::enumeration::{is_in_p, is_in_u};
use crate::error::{Error, Result};
use crate::overpartition::{ClassParams, Overpartition, Part};

/// Which 1-marked part a first dilation starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DilationType {
    /// The largest 1-marked part, which must be overlined.
    A,
    /// The rightmost overlined 1-marked part whose successor in the 1-marked
    /// row is non-overlined.
    B,
}

fn require_u(lambda: &Overpartition, p: ClassParams) -> Result<()> {
    if is_in_u(lambda, p) {
        Ok(())
    } else {
        Err(Error::domain(
            "U-class membership",
            format!("{lambda} is not in the U-class for {p}"),
        ))
    }
}

/// Lowers the weight by one at the largest non-overlined 1-marked part `a`:
/// if a non-overlined `a+1` exists and `a+1` is not overlined anywhere, `a`
/// becomes `ā` and the lowest-marked `a+1` becomes `a`; otherwise `a`
/// becomes the overlined `a-1`. The next larger 1-marked part, if any,
/// loses its overline.
pub fn first_reduction(lambda: &Overpartition, p: ClassParams) -> Result<Overpartition> {
    require_u(lambda, p)?;
    let out = reduce(lambda)?;
    debug_assert_eq!(out.weight() + 1, lambda.weight());
    debug_assert_eq!(profile_of(&out, p)?, profile_of(lambda, p)?);
    debug_assert!(is_in_u(&out, p));
    Ok(out)
}

fn reduce(lambda: &Overpartition) -> Result<Overpartition> {
    let mut b = Board::new(lambda);
    let row = b.row(1);
    let lj = row
        .iter()
        .copied()
        .filter(|&j| !b.overlined(j))
        .max_by_key(|&j| b.value(j))
        .ok_or_else(|| {
            Error::domain(
                "first reduction needs a non-overlined 1-marked part",
                format!("every 1-marked part of {lambda} is overlined"),
            )
        })?;
    let a = b.value(lj);
    let next_one = row.iter().copied().find(|&j| b.value(j) > a);
    let plain_above: Vec<usize> = b.with_value(a + 1).filter(|&j| !b.overlined(j)).collect();
    let bar_above = b.has_part(Part::bar(a + 1));
    if !plain_above.is_empty() && !bar_above {
        b.set_overlined(lj, true);
        let lowest = plain_above.into_iter().min_by_key(|&j| b.mark(j)).expect("nonempty");
        b.set_value(lowest, a);
    } else {
        if a < 2 {
            return Err(Error::domain(
                "first reduction case 2 needs a >= 2",
                format!("cannot lower the 1-marked part 1 of {lambda}"),
            ));
        }
        b.set_value(lj, a - 1);
        b.set_overlined(lj, true);
    }
    if let Some(nx) = next_one {
        if !b.overlined(nx) {
            return Err(Error::domain(
                "first reduction: 1-marked parts above the chosen part are overlined",
                format!("{lambda}"),
            ));
        }
        b.set_overlined(nx, false);
    }
    b.finish("first reduction")
}

/// Raises the weight by one; inverse of [`first_reduction`] for the
/// matching type.
pub fn first_dilation(lambda: &Overpartition, p: ClassParams, kind: DilationType) -> Result<Overpartition> {
    require_u(lambda, p)?;
    let out = dilate(lambda, kind)?;
    debug_assert_eq!(out.weight(), lambda.weight() + 1);
    debug_assert_eq!(profile_of(&out, p)?, profile_of(lambda, p)?);
    Ok(out)
}

fn dilate(lambda: &Overpartition, kind: DilationType) -> Result<Overpartition> {
    let mut b = Board::new(lambda);
    let row = b.row(1);
    let lj = match kind {
        DilationType::A => row.last().copied().filter(|&j| b.overlined(j)),
        DilationType::B => row
            .windows(2)
            .filter(|w| b.overlined(w[0]) && !b.overlined(w[1]))
            .map(|w| w[0])
            .next_back(),
    }
    .ok_or_else(|| {
        Error::domain(
            match kind {
                DilationType::A => "dilation type A needs an overlined largest 1-marked part",
                DilationType::B => "dilation type B needs an overlined 1-marked part followed by a non-overlined one",
            },
            format!("{lambda}"),
        )
    })?;
    let a = b.value(lj);
    let next_one = row.iter().copied().find(|&j| b.value(j) > a);
    let same: Vec<u32> = b.with_value(a).filter(|&j| j != lj).map(|j| b.mark(j)).collect();
    let below = b.marks_of_value(a - 1);
    let shared = same.iter().copied().filter(|m| below.contains(m)).min();
    b.set_overlined(lj, false);
    match shared {
        Some(r) => {
            let e = b
                .with_value(a)
                .find(|&j| j != lj && b.mark(j) == r)
                .expect("mark taken from this value");
            b.set_value(e, a + 1);
            if let Some(nx) = next_one {
                if b.overlined(nx) {
                    return Err(Error::domain(
                        "first dilation: next 1-marked part is non-overlined",
                        format!("{lambda}"),
                    ));
                }
                b.set_overlined(nx, true);
            }
        }
        None => {
            // The plain `a` left behind cannot keep mark 1 when `a - 1` is
            // 1-marked; then the chosen part itself is the one that moves.
            // Either way the overpartition is the same.
            let e = if below.contains(&1) {
                lj
            } else {
                b.with_value(a)
                    .filter(|&j| !b.overlined(j))
                    .max_by_key(|&j| b.mark(j))
                    .expect("the chosen part itself qualifies")
            };
            b.set_value(e, a + 1);
            if let Some(nx) = next_one {
                b.set_overlined(nx, true);
            }
        }
    }
    b.finish("first dilation")
}

/// Output of [`phi`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PhiOutput {
    pub alpha: Overpartition,
    pub beta: DistinctPartition,
}

/// Repeats the first reduction until every 1-marked part is overlined.
/// A part `t` of `β` is recorded each time a reduction starts from a
/// largest 1-marked part that is non-overlined, where `t - 1` reductions
/// happened since the previous record.
pub fn phi(lambda: &Overpartition, p: ClassParams) -> Result<PhiOutput> {
    phi_traced(lambda, p).map(|(out, _)| out)
}

/// [`phi`] together with every intermediate overpartition.
pub fn phi_traced(lambda: &Overpartition, p: ClassParams) -> Result<(PhiOutput, Vec<Overpartition>)> {
    require_u(lambda, p)?;
    let mut cur = lambda.clone();
    let mut trace = vec![cur.clone()];
    let mut beta = Vec::new();
    let mut t = 1;
    loop {
        let b = Board::new(&cur);
        let row = b.row(1);
        if row.iter().all(|&j| b.overlined(j)) {
            break;
        }
        let top = *row.last().expect("a non-overlined 1-marked part exists");
        if b.overlined(top) {
            t += 1;
        } else {
            beta.push(t);
            t = 1;
        }
        cur = first_reduction(&cur, p)?;
        trace.push(cur.clone());
    }
    let out = PhiOutput {
        alpha: cur,
        beta: DistinctPartition::new(beta)?,
    };
    debug_assert_eq!(lambda.weight(), out.alpha.weight() + out.beta.weight());
    debug_assert_eq!(lambda.len(), out.alpha.len());
    Ok((out, trace))
}

/// `β` read directly off the marking: with `i_1 < ... < i_s` the positions
/// of the non-overlined parts in the increasing 1-marked row,
/// `β = (N_1 - i_1 + 1, ..., N_1 - i_s + 1)`.
pub fn beta_closed_form(lambda: &Overpartition) -> DistinctPartition {
    let row = crate::gordon_mark(lambda).row(1);
    let n1 = row.len() as u32;
    let parts = row
        .iter()
        .enumerate()
        .filter(|(_, part)| !part.overlined)
        .map(|(idx, _)| n1 - idx as u32)
        .collect();
    DistinctPartition::new(parts).expect("positions are distinct")
}

/// Inverse of [`phi`]: for each part `b` of `β`, largest first, one type A
/// dilation followed by `b - 1` type B dilations.
pub fn phi_inv(alpha: &Overpartition, beta: &DistinctPartition, p: ClassParams) -> Result<Overpartition> {
    phi_inv_traced(alpha, beta, p).map(|(out, _)| out)
}

/// [`phi_inv`] together with every intermediate overpartition.
pub fn phi_inv_traced(
    alpha: &Overpartition,
    beta: &DistinctPartition,
    p: ClassParams,
) -> Result<(Overpartition, Vec<Overpartition>)> {
    if !is_in_u(alpha, p) || !is_in_p(alpha, p)? {
        return Err(Error::domain(
            "P-class membership",
            format!("{alpha} is not in the P-class for {p}"),
        ));
    }
    let n1 = profile_of(alpha, p)?.n1();
    if let Some(&big) = beta.parts().first() {
        if big >= n1 {
            return Err(Error::domain(
                "parts of the distinct partition are below N_1",
                format!("part {big} but N_1 = {n1}"),
            ));
        }
    }
    let mut cur = alpha.clone();
    let mut trace = vec![cur.clone()];
    for &part in beta.parts() {
        cur = first_dilation(&cur, p, DilationType::A)?;
        trace.push(cur.clone());
        for _ in 1..part {
            cur = first_dilation(&cur, p, DilationType::B)?;
            trace.push(cur.clone());
        }
    }
    debug_assert_eq!(cur.weight(), alpha.weight() + beta.weight());
    Ok((cur, trace))
}

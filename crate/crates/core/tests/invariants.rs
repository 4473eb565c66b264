use proptest::prelude::*;

use rrg::bijections::{beta_closed_form, chi, chi_inv, phi, phi_inv, psi, psi_inv};
use rrg::enumeration::{is_in_q, is_in_u};
use rrg::{gordon_mark, ClassParams, Overpartition, Part};

fn params() -> impl Strategy<Value = ClassParams> {
    (2u32..=4)
        .prop_flat_map(|k| (Just(k), 1..=k))
        .prop_map(|(k, i)| ClassParams::new(k, i).unwrap())
}

/// Random overpartitions with spread-out parts, kept when they lie in `U`.
fn member() -> impl Strategy<Value = (ClassParams, Overpartition)> {
    (params(), prop::collection::vec((1u32..=24, any::<bool>()), 0..10)).prop_filter_map(
        "outside the U-class",
        |(p, raw)| {
            let mut parts: Vec<Part> = raw.into_iter().map(|(v, o)| Part::new(v, o)).collect();
            parts.sort();
            parts.dedup_by(|a, b| a.overlined && a == b);
            let lambda = Overpartition::new(parts).ok()?;
            is_in_u(&lambda, p).then_some((p, lambda))
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, max_global_rejects: 20_000, ..ProptestConfig::default() })]

    #[test]
    fn phi_beta_is_the_closed_form((p, lambda) in member()) {
        let out = phi(&lambda, p).unwrap();
        prop_assert_eq!(&out.beta, &beta_closed_form(&lambda));
        prop_assert_eq!(lambda.weight(), out.alpha.weight() + out.beta.weight());
        prop_assert_eq!(phi_inv(&out.alpha, &out.beta, p).unwrap(), lambda);
    }

    #[test]
    fn psi_delta_fits_the_top_row((p, lambda) in member()) {
        let alpha = phi(&lambda, p).unwrap().alpha;
        let out = psi(&alpha, p).unwrap();
        let top = gordon_mark(&alpha).count(p.k() - 1) as usize;
        prop_assert!(out.delta.len() <= top);
        prop_assert_eq!(alpha.weight(), out.gamma.weight() + out.delta.weight());
        prop_assert!(is_in_q(&out.gamma, p).unwrap());
        prop_assert_eq!(psi_inv(&out.gamma, &out.delta, p).unwrap(), alpha);
    }

    #[test]
    fn chi_removes_the_profile_delta((p, lambda) in member()) {
        let gamma = psi(&phi(&lambda, p).unwrap().alpha, p).unwrap().gamma;
        let profile = gordon_mark(&gamma).profile(p.k()).unwrap();
        prop_assume!(profile.top() > 0);
        let mu = chi(&gamma, p).unwrap();
        prop_assert_eq!(gamma.weight() as i64 - mu.weight() as i64, profile.chi_delta(p));
        prop_assert_eq!(chi_inv(&mu, p).unwrap(), gamma);
    }
}

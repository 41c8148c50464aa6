use gyrometric::prelude::*;
use num_complex::Complex64;
use proptest::prelude::*;

fn disk_point() -> impl Strategy<Value = Complex64> {
    (0.0..0.99f64, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

/// A chain whose every step shrinks the tight half radius by `shrink`.
fn loose_chain(r0: f64, depth: usize, shrink: f64) -> NeighborhoodChain {
    let mut radii = vec![r0];
    for _ in 0..depth {
        let last = *radii.last().unwrap();
        radii.push(half_radius(last).unwrap() * shrink);
    }
    NeighborhoodChain::from_radii(radii).unwrap()
}

fn any_chain() -> impl Strategy<Value = NeighborhoodChain> {
    (0.05..0.99f64, 2usize..14, prop::option::of(0.5..1.0f64)).prop_map(|(r0, d, shrink)| {
        match shrink {
            None => build_chain(r0, d).unwrap(),
            Some(s) => loose_chain(r0, d, s),
        }
    })
}

/// Direct definition: the least grid point whose radius exceeds the norm.
fn linear_scan(f: &DyadicFamily, norm: f64) -> f64 {
    if norm == 0.0 {
        return 0.0;
    }
    let d = f.depth();
    (1..=1u64 << d)
        .find(|&k| norm < f.rho(k, d).unwrap())
        .map_or(1.0, |k| k as f64 / (1u64 << d) as f64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn tight_chain_halves_exactly(r0 in 0.01..0.999f64, depth in 1usize..40) {
        let chain = build_chain(r0, depth).unwrap();
        for n in 0..depth {
            let (big, small) = (chain.radius(n), chain.radius(n + 1));
            prop_assert!(small < big);
            prop_assert!((scalar_add(small, small) - big).abs() <= 1e-12);
        }
    }

    #[test]
    fn tight_chain_family_is_tanh(r0 in 0.01..0.99f64, n in 1usize..12, seed in any::<u64>()) {
        let f = build_dyadic_family(&build_chain(r0, 12).unwrap(), 12).unwrap();
        let m = 1 + seed % (1u64 << n);
        let q = m as f64 / (1u64 << n) as f64;
        let expected = (q * r0.atanh()).tanh();
        prop_assert!((f.rho(m, n).unwrap() - expected).abs() <= 1e-12);
    }

    #[test]
    fn family_increases_along_the_grid(chain in any_chain()) {
        let d = chain.depth().min(12);
        let f = build_dyadic_family(&chain, d).unwrap();
        let mut last = 0.0;
        for k in 1..=1u64 << d {
            let r = f.rho(k, d).unwrap();
            prop_assert!(r > last, "rho({}/2^{}) = {} after {}", k, d, r, last);
            last = r;
        }
        prop_assert!(f.audit().passed);
    }

    #[test]
    fn prenorm_matches_linear_scan(chain in any_chain(), norm in 0.0..1.0f64) {
        let f = build_dyadic_family(&chain, chain.depth().min(12)).unwrap();
        prop_assert_eq!(f.prenorm_of_norm(norm), linear_scan(&f, norm));
    }

    #[test]
    fn prenorm_monotone_in_norm(chain in any_chain(), a in 0.0..1.0f64, b in 0.0..1.0f64) {
        let f = build_dyadic_family(&chain, chain.depth().min(12)).unwrap();
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let (n_lo, n_hi) = (f.prenorm_of_norm(lo), f.prenorm_of_norm(hi));
        prop_assert!((0.0..=1.0).contains(&n_lo));
        prop_assert!(n_lo <= n_hi);
    }

    #[test]
    fn prenorm_subadditive(chain in any_chain(), a in disk_point(), b in disk_point()) {
        let disk = make_mobius();
        let f = build_dyadic_family(&chain, chain.depth().min(12)).unwrap();
        let sum = disk.op(&a, &b).unwrap();
        let lhs = prenorm(&f, &disk, &sum).unwrap();
        let rhs = prenorm(&f, &disk, &a).unwrap() + prenorm(&f, &disk, &b).unwrap();
        prop_assert!(lhs <= rhs + f.grid_step(), "{} > {}", lhs, rhs);
    }

    #[test]
    fn refinement_never_increases(chain in any_chain(), x in disk_point()) {
        let disk = make_mobius();
        let fine_depth = chain.depth().min(12);
        let fine = build_dyadic_family(&chain, fine_depth).unwrap();
        for d in 1..fine_depth {
            let coarse = build_dyadic_family(&chain, d).unwrap();
            prop_assert!(prenorm(&fine, &disk, &x).unwrap() <= prenorm(&coarse, &disk, &x).unwrap());
        }
    }

    #[test]
    fn mobius_metric_axioms(x in disk_point(), y in disk_point(), z in disk_point()) {
        let disk = make_mobius();
        let f = build_dyadic_family(&build_chain(0.8, 12).unwrap(), 12).unwrap();
        let d = |a: &Complex64, b: &Complex64| gyro_metric(&f, &disk, a, b).unwrap();
        prop_assert_eq!(d(&x, &x), 0.0);
        prop_assert_eq!(d(&x, &y), d(&y, &x));
        prop_assert!(d(&x, &z) <= d(&x, &y) + d(&y, &z) + f.grid_step());
        let p = sub_pseudometric(&f, &disk, &x, &y).unwrap();
        prop_assert!(p >= d(&x, &y));
    }

    #[test]
    fn gyrations_fix_the_prenorm(x in disk_point(), y in disk_point(), z in disk_point()) {
        let disk = make_mobius();
        let f = build_dyadic_family(&build_chain(0.8, 12).unwrap(), 12).unwrap();
        let moved = disk.gyr(&x, &y, &z).unwrap();
        prop_assert_eq!(prenorm(&f, &disk, &moved).unwrap(), prenorm(&f, &disk, &z).unwrap());
    }
}

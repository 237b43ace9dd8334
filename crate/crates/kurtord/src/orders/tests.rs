use super::*;
use crate::dist::FamilySpec;
use crate::orders::divided::kconvex_check;

fn d(spec: FamilySpec) -> Distribution {
    Distribution::new(spec).unwrap()
}

fn cfg() -> CheckConfig {
    CheckConfig::default()
}

#[test]
fn leq3_monomial_chain_holds() {
    let f = d(FamilySpec::PowerUnit { p: 3.0 });
    let g = d(FamilySpec::PowerUnit { p: 1.0 });
    let v = leq_k(&f, &g, 3, &cfg());
    assert_eq!(v.status, Status::Holds, "{v:?}");
    // R''' is the constant 6 here.
    assert!((v.margin - 6.0).abs() < 1e-6);
}

#[test]
fn leq3_fails_across_the_reflected_pair() {
    let f = d(FamilySpec::PowerUnit { p: 3.0 });
    let h = d(FamilySpec::ReflectedCubeRoot { c: 1.0 });
    let v = leq_k(&f, &h, 3, &cfg());
    assert_eq!(v.status, Status::Fails);
    match v.witness.expect("failing verdict carries a witness") {
        Witness::Point { t, value, .. } => {
            assert!(
                t > 0.378202717280991843571462753572 && t < 0.870741702681907064844329098317,
                "witness at t={t}"
            );
            assert!(value < 0.0);
        }
        w => panic!("unexpected witness {w:?}"),
    }
}

#[test]
fn leq_k_reflexive_for_all_families_and_orders() {
    let specs = [
        FamilySpec::PowerUnit { p: 0.4 },
        FamilySpec::PowerUnit { p: 3.0 },
        FamilySpec::ReflectedCubeRoot { c: 2.0 },
        FamilySpec::Weibull { k: 0.2 },
        FamilySpec::Weibull { k: 1.0 },
        FamilySpec::Weibull { k: 4.0 },
        FamilySpec::SinhArsinh { nu: -1.5, tau: 0.5 },
        FamilySpec::SinhArsinh { nu: 0.7, tau: 3.0 },
        FamilySpec::StandardNormal,
    ];
    for spec in specs {
        let f = d(spec);
        for k in 0..=3 {
            let v = leq_k(&f, &f, k, &cfg());
            assert_eq!(v.status, Status::Holds, "k={k} on {spec:?}: {v:?}");
            assert!(v.margin.abs() < 1e-6, "margin {} for {spec:?} k={k}", v.margin);
        }
    }
}

#[test]
fn kconvex_on_the_example_transport_map() {
    // R_FH of the monomial/reflected pair is not 3-convex; witnesses live in
    // the negative region of its third derivative. The clamp level sits far
    // below the domain edges so no clamping kink enters the samples.
    let f = d(FamilySpec::PowerUnit { p: 3.0 });
    let h = d(FamilySpec::ReflectedCubeRoot { c: 1.0 });
    let map = TransportMap::with_eps(f, h, 1e-12);
    let phi = |t: f64| map.r(t).unwrap();
    let v = kconvex_check(phi, (1e-3, 1.0 - 1e-3), 3, &cfg());
    assert_eq!(v.status, Status::Fails);
    match v.witness.unwrap() {
        Witness::Tuple { nodes, value } => {
            assert!(value < 0.0);
            assert!(nodes
                .iter()
                .all(|&x| x > 0.378202717280991843571462753572
                    && x < 0.870741702681907064844329098317));
        }
        w => panic!("unexpected witness {w:?}"),
    }
}

#[test]
fn gs_order_examples() {
    // tau_F > tau_G at threshold zero.
    let f = d(FamilySpec::SinhArsinh { nu: 0.3, tau: 2.0 });
    let g = d(FamilySpec::SinhArsinh { nu: -0.4, tau: 1.2 });
    assert_eq!(leq_gs(&f, &g, 0.0, &cfg()).status, Status::Holds);

    // Identity pair: R'' vanishes identically.
    let v = leq_gs(&g, &g, 0.0, &cfg());
    assert_eq!(v.status, Status::Holds);

    // The rescaled counterexample triple: F fails against H for matched
    // thresholds of either sign and at zero.
    let f = d(FamilySpec::PowerUnit { p: 3.0 });
    for c in [0.1, 1.0, 10.0] {
        let h = d(FamilySpec::ReflectedCubeRoot { c });
        for t0 in [-c, 0.0, c] {
            let v = leq_gs(&f, &h, t0, &cfg());
            assert_eq!(v.status, Status::Fails, "c={c}, t0={t0}: {v:?}");
            assert!(matches!(v.witness, Some(Witness::Crossing { .. })));
        }
    }
}

#[test]
fn reasonable_threshold_intervals() {
    let f = d(FamilySpec::Weibull { k: 1.3 });
    let ti = reasonable_thresholds(&f, &f, &cfg()).unwrap();
    assert!(ti.empty, "identity pair has constant R'': {ti:?}");

    // R'' climbs from about -4 to 4 for the tau~ = 2 symmetric pair.
    let f = d(FamilySpec::SinhArsinh { nu: 0.0, tau: 2.0 });
    let g = d(FamilySpec::StandardNormal);
    let ti = reasonable_thresholds(&f, &g, &cfg()).unwrap();
    assert!(!ti.empty);
    assert!((ti.lo + 4.0).abs() < 0.5 && (ti.hi - 4.0).abs() < 0.5, "{ti:?}");

    // R''(t) = 6t on (0, 1).
    let f = d(FamilySpec::PowerUnit { p: 3.0 });
    let g = d(FamilySpec::PowerUnit { p: 1.0 });
    let ti = reasonable_thresholds(&f, &g, &cfg()).unwrap();
    assert!(ti.lo > 0.0 && ti.lo < 0.5, "{ti:?}");
    assert!(ti.hi > 5.5 && ti.hi <= 6.0, "{ti:?}");
}

#[test]
fn strict_gss_examples() {
    // R''(t) = (4t^3 + 6t)(t^2+1)^{-3/2} crosses zero strictly at the origin.
    let f = d(FamilySpec::SinhArsinh { nu: 0.0, tau: 2.0 });
    let g = d(FamilySpec::StandardNormal);
    assert_eq!(strict_gss(&f, &g, &cfg()).status, Status::Holds);

    // No strict signs on the diagonal.
    assert_eq!(strict_gss(&f, &f, &cfg()).status, Status::Fails);

    // R'' = 6t > 0 throughout: empty left side, degenerate crossing at p = 0.
    let f = d(FamilySpec::PowerUnit { p: 3.0 });
    let g = d(FamilySpec::PowerUnit { p: 1.0 });
    assert_eq!(strict_gss(&f, &g, &cfg()).status, Status::Holds);
}

#[test]
fn inflection_value_reports() {
    // Symmetric pair ordered by <=_3: the crossing sits at the median level.
    let f = d(FamilySpec::SinhArsinh { nu: 0.0, tau: 2.0 });
    let g = d(FamilySpec::StandardNormal);
    let rep = inflection_values(&f, &g, &cfg()).unwrap();
    assert_eq!(rep.leq3, Status::Holds);
    assert!(!rep.is_empty());
    assert!(rep.contains(0.5), "{rep:?}");
    assert!((rep.p_lo - 0.5).abs() < 0.01 && (rep.p_hi - 0.5).abs() < 0.01);

    // R'' >= 0 everywhere: p = 0 is the degenerate inflection value.
    let f = d(FamilySpec::PowerUnit { p: 3.0 });
    let g = d(FamilySpec::PowerUnit { p: 1.0 });
    let rep = inflection_values(&f, &g, &cfg()).unwrap();
    assert!(rep.degenerate_zero && !rep.degenerate_one);
    assert_eq!(rep.p_lo, 0.0);

    // R''(t) = -t^{-3/2}/4 < 0: degenerate at p = 1.
    let f = d(FamilySpec::Weibull { k: 1.0 });
    let g = d(FamilySpec::Weibull { k: 2.0 });
    let rep = inflection_values(&f, &g, &cfg()).unwrap();
    assert!(rep.degenerate_one && !rep.degenerate_zero);
    assert_eq!(rep.p_hi, 1.0);
}

#[test]
fn equiv3_examples() {
    // R(t) = t^2: a polynomial of degree <= 2 is kurtosis-neutral.
    let f = d(FamilySpec::PowerUnit { p: 2.0 });
    let g = d(FamilySpec::PowerUnit { p: 1.0 });
    assert_eq!(equiv_3(&f, &g, &cfg()).status, Status::Holds);

    // Parameter ratio 1/2 reaches the equivalence band.
    let f = d(FamilySpec::Weibull { k: 1.0 });
    let g = d(FamilySpec::Weibull { k: 2.0 });
    assert_eq!(equiv_3(&f, &g, &cfg()).status, Status::Holds);

    // Ratio 1/1.3 lies in (1/2, 1): ordered one way only.
    let f = d(FamilySpec::Weibull { k: 1.0 });
    let g = d(FamilySpec::Weibull { k: 1.3 });
    let v = equiv_3(&f, &g, &cfg());
    assert_eq!(v.status, Status::Fails);
}

#[test]
fn equiv3_agrees_with_both_directions() {
    let pool = [
        d(FamilySpec::Weibull { k: 1.0 }),
        d(FamilySpec::Weibull { k: 1.7 }),
        d(FamilySpec::Weibull { k: 3.6 }),
        d(FamilySpec::PowerUnit { p: 0.4 }),
        d(FamilySpec::PowerUnit { p: 2.5 }),
    ];
    for f in &pool {
        for g in &pool {
            let both = leq_k(f, g, 3, &cfg()).holds() && leq_k(g, f, 3, &cfg()).holds();
            let eq = equiv_3(f, g, &cfg());
            assert_eq!(
                eq.holds(),
                both,
                "equiv_3 disagrees with two-sided check on {:?} vs {:?}",
                f.spec(),
                g.spec()
            );
        }
    }
}

#[test]
fn transitivity_probe_finds_the_counterexamples() {
    let trio = [
        d(FamilySpec::PowerUnit { p: 3.0 }),
        d(FamilySpec::PowerUnit { p: 1.0 }),
        d(FamilySpec::ReflectedCubeRoot { c: 1.0 }),
    ];
    let rep = transitivity_probe(&trio, OrderRelation::LeqK(3), &cfg()).unwrap();
    assert!(rep
        .violations
        .iter()
        .any(|v| (v.a, v.b, v.c) == (0, 1, 2)));

    let weibulls = [
        d(FamilySpec::Weibull { k: 1.0 }),
        d(FamilySpec::Weibull { k: 1.5 }),
        d(FamilySpec::Weibull { k: 0.7 }),
    ];
    let rep = transitivity_probe(&weibulls, OrderRelation::LeqK(3), &cfg()).unwrap();
    assert!(rep
        .violations
        .iter()
        .any(|v| (v.a, v.b, v.c) == (0, 1, 2)));

    // A chain of tau ratios >= 2 stays transitive.
    let sas = [
        d(FamilySpec::SinhArsinh { nu: 0.0, tau: 4.0 }),
        d(FamilySpec::SinhArsinh { nu: 1.0, tau: 2.0 }),
        d(FamilySpec::SinhArsinh { nu: -1.0, tau: 1.0 }),
    ];
    let rep = transitivity_probe(&sas, OrderRelation::LeqK(3), &cfg()).unwrap();
    assert!(rep.violations.is_empty(), "{:?}", rep.violations);

    let too_few = [sas[0], sas[1]];
    assert!(transitivity_probe(&too_few, OrderRelation::LeqK(3), &cfg()).is_err());
}

#[test]
fn refine_crossing_locations() {
    // R''_FH = 18c(4t^7 - 5t^4 + t) falls through zero at 2^{-2/3}.
    let f = d(FamilySpec::PowerUnit { p: 3.0 });
    let h = d(FamilySpec::ReflectedCubeRoot { c: 1.0 });
    let locs = refine_sign_changes(&f, &h, 2, 0.0, &cfg()).unwrap();
    assert_eq!(locs.len(), 1, "{locs:?}");
    assert!(!locs[0].rising);
    assert!((locs[0].t - 0.629960524947436582383605303639).abs() < 1e-6);
}

use kurtord::*;

#[test]
fn cell() {
    let f = Distribution::new(FamilySpec::SinhArsinh { nu: -2.0, tau: 1.0 }).unwrap();
    let g = Distribution::new(FamilySpec::SinhArsinh { nu: -1.0, tau: 1.5 }).unwrap();
    let cfg = CheckConfig { eps_p: 1e-100, ..CheckConfig::default() };
    let v = leq_gs(&f, &g, 0.0, &cfg);
    println!("gs0 status {:?} note {:?}", v.status, v.note);
    let v = leq_k(&f, &g, 3, &cfg);
    println!("k3 status {:?} note {:?}", v.status, v.note);
    let cfg = CheckConfig { eps_p: 1e-40, ..CheckConfig::default() };
    let v = leq_gs(&f, &g, 0.0, &cfg);
    println!("eps40 gs0 status {:?} note {:?} margin {}", v.status, v.note, v.margin);
}

use skewcat::backends::finset::{Elem, Obj};
use skewcat::cat::{run, Check, Status};
use skewcat::mutate::Mutation;
use skewcat::skewmon::set::{dot1_matches_cartesian, r2_check, strength_checks, HomFunctor};
use skewcat::skewmon::{functor_checks, naturality_checks, scan, smc_checks, Class, SetSkew, SkewOps};

fn sets(max: usize) -> Vec<Obj> {
    let names = ["a", "b", "c"];
    (0..=max).map(|n| Obj::atoms(format!("S{n}"), &names[..n])).collect()
}

fn all_pass(checks: Vec<Check>) {
    for c in &checks {
        let r = run(c);
        assert_eq!(r.status, Status::Pass, "{} failed: {:?}", r.id, r.witness);
    }
}

fn failing(checks: Vec<Check>) -> Vec<String> {
    checks.iter().map(run).filter(|r| r.failed()).map(|r| r.id).collect()
}

fn two() -> Obj {
    Obj::atoms("R", &["0", "1"])
}

#[test]
fn cartesian_axioms_hold() {
    let s = SetSkew::cartesian();
    let u = sets(3);
    all_pass(smc_checks("smc", &s, &u));
    all_pass(naturality_checks("smc", &s, &u));
    all_pass(strength_checks(&s, &u[..3], &u));
    assert!(scan(&s, &u).all_iso());
}

#[test]
fn dot_axioms_hold_at_r2() {
    let s = SetSkew::dot(&two());
    let u = sets(3);
    all_pass(smc_checks("smc", &s, &u));
    all_pass(strength_checks(&s, &u[..3], &u));
}

#[test]
fn dot_naturality_at_r2() {
    let s = SetSkew::dot(&two());
    let u = sets(2);
    all_pass(naturality_checks("smc", &s, &u));
}

#[test]
fn dot_tensor_size() {
    let s = SetSkew::dot(&two());
    let m = Obj::atoms("M", &["a", "b"]);
    let n = Obj::atoms("N", &["x"]);
    assert_eq!(s.tensor(&m, &n).unwrap().size(), 4);
}

// brute-force classification of the dot coherences straight from the
// formulas on raw tuples
fn oracle_eta(m: usize) -> Class {
    // m ↦ (id, m) into Hom(2,2) x M: injective; onto iff 4m == m
    if 4 * m == m {
        Class::Iso
    } else {
        Class::MonicNotEpic
    }
}

fn oracle_eps(m: usize) -> Class {
    // (f, r) ↦ f(r) on Hom(2,M) x 2; count fibres directly
    let mut hits = vec![0usize; m];
    for f0 in 0..m {
        for f1 in 0..m {
            hits[f0] += 1;
            hits[f1] += 1;
        }
    }
    let injective = hits.iter().all(|&h| h <= 1);
    let onto = hits.iter().all(|&h| h >= 1);
    match (injective, onto) {
        (true, true) => Class::Iso,
        (true, false) => Class::MonicNotEpic,
        (false, true) => Class::EpicNotMonic,
        (false, false) => Class::Neither,
    }
}

#[test]
fn dot_scan_matches_oracle() {
    let s = SetSkew::dot(&two());
    let u = sets(3);
    let sc = scan(&s, &u);
    for (k, o) in u.iter().enumerate() {
        let e = sc.find("eta", |e| e.at == [o.name()]).unwrap();
        assert_eq!(e.class, oracle_eta(k), "eta at {k}");
        let e = sc.find("eps", |e| e.at == [o.name()]).unwrap();
        assert_eq!(e.class, oracle_eps(k), "eps at {k}");
    }
    assert_eq!(oracle_eps(0), Class::Iso);
    assert!(!sc.family_iso("gamma"));
    let g = sc.find("gamma", |e| e.class != Class::Iso).unwrap();
    assert!(g.witness.is_some());
}

#[test]
fn hom_functor_is_skew_monoidal() {
    let s = SetSkew::dot(&two());
    let h = HomFunctor::new(&s).unwrap();
    let u = sets(2);
    all_pass(functor_checks("functor.H", &h, &u));
}

#[test]
fn r2_spot_check_passes() {
    let s = SetSkew::dot(&two());
    let u = sets(3);
    assert_eq!(run(&r2_check(&s, &u, 7)).status, Status::Pass);
}

#[test]
fn dot_at_one_point_is_cartesian() {
    let s = SetSkew::dot(&Obj::atoms("R", &["*"]));
    assert!(dot1_matches_cartesian(&s, &sets(2)).unwrap().is_none());
}

#[test]
fn constant_eps_breaks_smc3() {
    let u = sets(2);
    let m = &u[2];
    let s0 = SetSkew::dot(&two());
    let mr = s0.tensor(m, &s0.unit()).unwrap();
    // send (id-like map, 0) to the wrong point
    let x = mr.elems().unwrap()[1].clone();
    let y = s0.eps(m).unwrap().apply(&x);
    let other = m.elems().unwrap().iter().find(|e| **e != y).unwrap().clone();
    let s = SetSkew::dot(&two()).with_mutations(vec![Mutation {
        family: "eps".into(),
        at: vec![m.name().into()],
        input: x.to_string(),
        output: other.to_string(),
    }]);
    let bad = failing(smc_checks("smc", &s, &u));
    assert!(bad.contains(&"smc.SMC3".to_string()), "{bad:?}");
}

#[test]
fn transposed_strength_breaks_sma10() {
    let u = sets(2);
    let s0 = SetSkew::dot(&two());
    let v = &u[2];
    let (m, n) = (&u[2], &u[2]);
    let g = s0.strength_prime(v, m, n).unwrap();
    let x = g.dom().elems().unwrap()[0].clone();
    let y = g.apply(&x);
    // swap the v-coordinate inside the output
    let inner = y.snd();
    let flipped = Elem::pair(y.fst().clone(), Elem::pair(Elem::atom("b"), inner.snd().clone()));
    assert_ne!(flipped, y);
    let s = SetSkew::dot(&two()).with_mutations(vec![Mutation {
        family: "Gamma'".into(),
        at: vec![v.name().into(), m.name().into(), n.name().into()],
        input: x.to_string(),
        output: flipped.to_string(),
    }]);
    let bad = failing(strength_checks(&s, &u, &u));
    assert!(bad.contains(&"strengths.sma-10".to_string()), "{bad:?}");
}

#[test]
fn elem_parse_round_trips() {
    for s in ["a", "(a,b)", "[(a,[0,1]),x]", "[]", "((*,b),[c])"] {
        assert_eq!(Elem::parse(s).unwrap().to_string(), s);
    }
    assert!(Elem::parse("(a,b").is_err());
}

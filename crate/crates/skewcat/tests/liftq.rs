use std::collections::HashMap;

use skewcat::backends::finset::{Elem, Obj};
use skewcat::cat::{run, Check, CheckReport, Status};
use skewcat::liftq::*;
use skewcat::modcat::{algebras, EmUniverse, LiftFunctor, Lifted, EMQuot};
use skewcat::mutate::Mutation;
use skewcat::skewmon::{SetSkew, SkewOps};
use skewcat::underlying::{forg, Sigma};

fn sets(max: usize) -> Vec<Obj> {
    let atoms = ["a", "b", "c"];
    (0..=max).map(|k| Obj::atoms(format!("S{k}"), &atoms[..k])).collect()
}

fn r2() -> Obj {
    Obj::atoms("R", &["0", "1"])
}

fn reports(checks: &[Check]) -> Vec<CheckReport> {
    checks.iter().map(run).collect()
}

fn all_pass(checks: &[Check]) {
    for rep in reports(checks) {
        assert_ne!(rep.status, Status::Fail, "{} failed: {:?} {:?}", rep.id, rep.witness, rep.reason);
    }
}

fn status_of(reps: &[CheckReport], id: &str) -> Status {
    reps.iter().find(|r| r.id == id).unwrap_or_else(|| panic!("no check {id}")).status
}

fn appendix_suites(s: &SetSkew) {
    let sm = Smpq::new(s);
    let u = QUniverse::new(&sm, &sets(2)).unwrap();
    assert!(!u.qalgs.algs.is_empty());
    let phi = sm.phi();
    all_pass(&smpq_checks(&sm, &phi, &u));
    let bp = barphi(&sm, &phi);
    all_pass(&barphi_checks(&bp, &u));
}

#[test]
fn cartesian_appendix() {
    let s = SetSkew::cartesian();
    appendix_suites(&s);
    let sm = Smpq::new(&s);
    let u = QUniverse::new(&sm, &sets(2)).unwrap();
    let phi = sm.phi();
    let reps = reports(&smpq_checks(&sm, &phi, &u));
    assert_eq!(status_of(&reps, "smpq.trivial-E-collapse"), Status::Pass);
}

#[test]
fn dot_appendix() {
    appendix_suites(&SetSkew::dot(&r2()));
}

/// Tables of `ρ`, `λ₁`, `λ₂` on `M⊛N = Hom(R,M) x N` for the dot
/// structure, written out: `ρ(e,(f,n)) = (f∘e,n)`,
/// `λ₁(e,(f,n)) = (λ_M(e,-)∘f,n)`, `λ₂(e,(f,n)) = (f,λ_N(e,n))`.
#[test]
fn dot_actions_by_hand() {
    let r = r2();
    let s = SetSkew::dot(&r);
    let re = unit_eobj(&s);
    let rs = r.elems().unwrap();
    let idx = |x: &Elem| rs.iter().position(|y| y == x).unwrap();
    let act = |a: &EObj, e: &Elem, x: &Elem| a.act.apply(&Elem::pair(e.clone(), x.clone()));
    let mn = s.tensor(&re.obj, &re.obj).unwrap();
    let (rho_t, l1, l2) = (rho(&s, &re.obj, &re.obj).unwrap(), lambda1(&s, &re, &re.obj).unwrap(), lambda2(&s, &re.obj, &re).unwrap());
    for e in s.endo().elems().unwrap().iter() {
        for x in mn.elems().unwrap().iter() {
            let (f, n) = (x.fst().table().to_vec(), x.snd().clone());
            let et = e.table();
            let want_rho = Elem::pair(Elem::fun(et.iter().map(|y| f[idx(y)].clone()).collect()), n.clone());
            let want_l1 = Elem::pair(Elem::fun(f.iter().map(|y| act(&re, e, y)).collect()), n.clone());
            let want_l2 = Elem::pair(Elem::fun(f.clone()), act(&re, e, &n));
            let ex = Elem::pair(e.clone(), x.clone());
            assert_eq!(rho_t.apply(&ex), want_rho);
            assert_eq!(l1.apply(&ex), want_l1);
            assert_eq!(l2.apply(&ex), want_l2);
        }
    }
    assert!(matches!(triple_actions(&s, &re, &re, &re).unwrap(), skewcat::cat::Outcome::Pass));
}

/// `|M⊛_qN|` for the dot structure is the number of classes of
/// `Hom(R,M) x N` under `(f∘e,n) ~ (f,e·n)`, counted by flood fill.
#[test]
fn quotient_sizes() {
    let r = r2();
    let s = SetSkew::dot(&r);
    let sm = Smpq::new(&s);
    let rs = r.elems().unwrap();
    let idx = |x: &Elem| rs.iter().position(|y| y == x).unwrap();
    let mut xs = Vec::new();
    for m in sets(2) {
        xs.extend(e_objects(&s, &m).unwrap());
    }
    xs.push(unit_eobj(&s));
    for a in &xs {
        for b in &xs {
            let pts: Vec<Elem> = s.tensor(&a.obj, &b.obj).unwrap().elems().unwrap().to_vec();
            let mut adj: HashMap<Elem, Vec<Elem>> = HashMap::new();
            for e in s.endo().elems().unwrap().iter() {
                for x in &pts {
                    let f = x.fst().table();
                    let fe = Elem::pair(Elem::fun(e.table().iter().map(|y| f[idx(y)].clone()).collect()), x.snd().clone());
                    let en = Elem::pair(x.fst().clone(), b.act.apply(&Elem::pair(e.clone(), x.snd().clone())));
                    adj.entry(fe.clone()).or_default().push(en.clone());
                    adj.entry(en).or_default().push(fe);
                }
            }
            let mut seen = std::collections::HashSet::new();
            let mut classes = 0;
            for x in &pts {
                if seen.insert(x.clone()) {
                    classes += 1;
                    let mut stack = vec![x.clone()];
                    while let Some(y) = stack.pop() {
                        for z in adj.get(&y).into_iter().flatten() {
                            if seen.insert(z.clone()) {
                                stack.push(z.clone());
                            }
                        }
                    }
                }
            }
            let got = sm.q().tensor(a, b).unwrap().obj.size();
            assert_eq!(got, classes, "{} % {}", a.name, b.name);
        }
    }
}

#[test]
fn lambda2_mutation_breaks_a_relation() {
    let s0 = SetSkew::dot(&r2());
    let m = sets(2)[2].clone();
    let b = e_objects(&s0, &m).unwrap().last().unwrap().clone();
    let clean = lambda2(&s0, &m, &b).unwrap();
    let x = clean.dom().elems().unwrap()[1].clone();
    let y = clean.cod().elems().unwrap().iter().find(|y| **y != clean.apply(&x)).unwrap().clone();
    let mu = Mutation {
        family: "lambda2".into(),
        at: vec![m.name().to_string(), b.name.clone()],
        input: x.to_string(),
        output: y.to_string(),
    };
    let s = s0.with_mutations(vec![mu]);
    let o = pair_actions(&s, &b, &b).unwrap();
    assert!(matches!(o, skewcat::cat::Outcome::Fail(_)), "{o:?}");
}

#[test]
fn q_mutation_is_caught_by_barphi() {
    let s0 = SetSkew::dot(&r2());
    let sm0 = Smpq::new(&s0);
    let u0 = QUniverse::new(&sm0, &sets(2)).unwrap();
    // a pair whose quotient has at least two points
    let (a, b) = u0
        .eobjs
        .iter()
        .flat_map(|a| u0.eobjs.iter().map(move |b| (a, b)))
        .find(|(a, b)| sm0.q().tensor(a, b).unwrap().obj.size() >= 2)
        .unwrap();
    let p = sm0.q().proj(a, b).unwrap();
    let x = p.dom().elems().unwrap()[0].clone();
    let y = p.cod().elems().unwrap().iter().find(|y| **y != p.apply(&x)).unwrap().clone();
    let mu = Mutation {
        family: "q".into(),
        at: vec![a.name.clone(), b.name.clone()],
        input: x.to_string(),
        output: y.to_string(),
    };
    let sm = Smpq::new(&s0.with_mutations(vec![mu]));
    let u = QUniverse::new(&sm, &sets(2)).unwrap();
    let phi = sm.phi();
    let bp = barphi(&sm, &phi);
    let mut reps = reports(&smpq_checks(&sm, &phi, &u));
    reps.extend(reports(&barphi_checks(&bp, &u)));
    let failed: Vec<&CheckReport> = reps.iter().filter(|r| r.status == Status::Fail).collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|r| r.witness.is_some()));
    assert_eq!(status_of(&reps, "smpq.q"), Status::Fail);
}

#[test]
fn left_adjoint_on_free_objects() {
    let s = SetSkew::dot(&r2());
    let sm = Smpq::new(&s);
    for m in sets(2) {
        let fe = left_adjoint(sm.q(), &free_e(&s, &m)).unwrap();
        assert_eq!(fe.obj.size(), s.t(&m).unwrap().size());
        assert!(matches!(free_comparison(sm.q(), &m).unwrap(), skewcat::cat::Outcome::Pass));
    }
}

#[test]
fn lifts() {
    for s in [SetSkew::cartesian(), SetSkew::dot(&r2())] {
        let base = sets(2);
        let mut algs = Vec::new();
        for m in &base {
            algs.extend(algebras(&s, m).unwrap());
        }
        let u = EmUniverse::new(base.clone(), algs);
        let em = Lifted::new(EMQuot::new(s.clone()));
        let sg = Sigma::new(&s);
        let dem = Lifted::new(EMQuot::new(sg.dot.clone()));
        let f = forg(&sg, &em, &dem);
        let idf = IdFunctor { s: s.clone() };
        let idl = LiftFunctor {
            name: "Id".into(),
            k: &idf,
            src: &em,
            tgt: &em,
        };
        let sm = Smpq::new(&s);
        let qu = QUniverse::new(&sm, &base).unwrap();
        let phi = sm.phi();
        let bp = barphi(&sm, &phi);
        all_pass(&lift_checks(&idl, &f, &bp, &u, &qu));
    }
}

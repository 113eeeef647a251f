use std::collections::BTreeSet;

use skewcat::backends::finset::{Elem, Obj};
use skewcat::cat::{run, Status};
use skewcat::modcat::smp2::{smc4_verdicts, smp2_checks};
use skewcat::modcat::*;
use skewcat::mutate::Mutation;
use skewcat::skewmon::{SetSkew, SkewOps};

fn sets(max: usize) -> Vec<Obj> {
    let atoms = ["a", "b", "c"];
    (0..=max).map(|k| Obj::atoms(format!("S{k}"), &atoms[..k])).collect()
}

fn r2() -> Obj {
    Obj::atoms("R", &["0", "1"])
}

fn all_pass(checks: &[skewcat::cat::Check]) {
    for c in checks {
        let rep = run(c);
        assert_eq!(rep.status, Status::Pass, "{} failed: {:?}", rep.id, rep.witness);
    }
}

/// All functions `E x M -> M` that are monoid actions of `End(R)` under
/// composition, as sorted tables keyed by (e, m) display strings.
fn monoid_actions(r: &Obj, m: &Obj) -> BTreeSet<Vec<(String, String, String)>> {
    let rs = r.elems().unwrap();
    let ms = m.elems().unwrap();
    let mut ends: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..rs.len() {
        ends = ends.into_iter().flat_map(|t| (0..rs.len()).map(move |x| [t.clone(), vec![x]].concat())).collect();
    }
    let id: Vec<usize> = (0..rs.len()).collect();
    let comp = |f: &Vec<usize>, g: &Vec<usize>| g.iter().map(|&x| f[x]).collect::<Vec<usize>>();
    let cells = ends.len() * ms.len();
    let mut out = BTreeSet::new();
    let total = ms.len().pow(cells as u32);
    for code in 0..total {
        let mut c = code;
        let mut act = vec![0usize; cells];
        for slot in act.iter_mut() {
            *slot = c % ms.len();
            c /= ms.len();
        }
        let at = |e: &Vec<usize>, x: usize| act[ends.iter().position(|y| y == e).unwrap() * ms.len() + x];
        let unit = (0..ms.len()).all(|x| at(&id, x) == x);
        let assoc = ends.iter().all(|f| ends.iter().all(|g| (0..ms.len()).all(|x| at(&comp(f, g), x) == at(f, at(g, x)))));
        if unit && assoc {
            let name = |e: &Vec<usize>| Elem::fun(e.iter().map(|&i| rs[i].clone()).collect()).to_string();
            let mut t: Vec<_> = ends
                .iter()
                .flat_map(|e| (0..ms.len()).map(move |x| (e, x)))
                .map(|(e, x)| (name(e), ms[x].to_string(), ms[at(e, x)].to_string()))
                .collect();
            t.sort();
            out.insert(t);
        }
    }
    out
}

fn as_table(a: &TAlg<Obj>) -> Vec<(String, String, String)> {
    let mut t: Vec<_> = a
        .act
        .dom()
        .elems()
        .unwrap()
        .iter()
        .map(|x| (x.fst().to_string(), x.snd().to_string(), a.act.apply(x).to_string()))
        .collect();
    t.sort();
    t
}

#[test]
fn dot_algebras_are_monoid_actions() {
    let s = SetSkew::dot(&r2());
    for m in sets(2) {
        let got: BTreeSet<_> = algebras(&s, &m).unwrap().iter().map(as_table).collect();
        assert_eq!(got, monoid_actions(&r2(), &m), "carrier {}", m.name());
    }
}

fn universe(s: &SetSkew, max: usize) -> EmUniverse<Obj> {
    let base = sets(max);
    let mut algs = Vec::new();
    for m in &base {
        algs.extend(algebras(s, m).unwrap());
    }
    EmUniverse::new(base, algs)
}

#[test]
fn dot_horizontal_tensor() {
    let s = SetSkew::dot(&r2());
    let u = universe(&s, 2);
    assert_eq!(u.algs.len(), 1 + 1 + monoid_actions(&r2(), &sets(2)[2]).len());
    let em = Lifted::new(EMQuot::new(s.clone()));
    all_pass(&em_checks(&em, &u));
    let g = Forget { em: &em };
    all_pass(&forget_checks(&g, &u));
    let algs: Vec<TAlg<Obj>> = u.algs.iter().map(|a| a.alg().unwrap().clone()).collect();
    all_pass(&ract_checks(&s, &algs, &u.base));
}

#[test]
fn cartesian_horizontal_tensor() {
    let s = SetSkew::cartesian();
    let u = universe(&s, 2);
    let em = Lifted::new(EMQuot::new(s));
    all_pass(&em_checks(&em, &u));
}

#[test]
fn j_size_matches_hom_count() {
    let r = r2();
    let s = SetSkew::dot(&r);
    let em = Lifted::new(EMQuot::new(s.clone()));
    for n in sets(3) {
        for m in sets(2) {
            let (j, _) = j_map(&em, &n, &m).unwrap();
            // |Hom(R,N)| * |M|, counted directly
            let homs = n.size().pow(r.size() as u32);
            assert_eq!(j.dom().size(), homs * m.size());
        }
    }
}

#[test]
fn psi_mutation_is_caught() {
    let s = SetSkew::dot(&r2());
    let u = universe(&s, 2);
    let k = u.algs.len() - 1;
    let a = u.algs[k].alg().unwrap().clone();
    assert_eq!(a.obj.size(), 2);
    // move the action on A⊛̂A at its first point to a different value
    let clean = Lifted::new(EMQuot::new(s.clone()));
    let ab = clean.tensor(&u.algs[k], &u.algs[k]).unwrap();
    let act = ab.alg().unwrap().act.clone();
    let x = act.dom().elems().unwrap()[0].clone();
    let y = act.cod().elems().unwrap().iter().find(|y| **y != act.apply(&x)).unwrap().clone();
    let mu = Mutation {
        family: "psi".into(),
        at: vec![a.name.clone(), a.name.clone()],
        input: x.to_string(),
        output: y.to_string(),
    };
    let em = Lifted::new(EMQuot::new(s.clone()).with_mutations(vec![mu]));
    let reps: Vec<_> = em_checks(&em, &u).iter().map(run).collect();
    let psi = reps.iter().find(|r| r.id == "em.psi").unwrap();
    assert_eq!(psi.status, Status::Fail);
    assert!(psi.witness.is_some());
}

/// `⊛²` SMC4 by hand: the composite sends `(f,(e,n))` to `(r ↦ f(e(r)), (1,n))`,
/// evaluated on raw tables.
fn smc4_by_hand(r: &Obj, m: &Obj, n: &Obj) -> bool {
    let rs = r.elems().unwrap();
    let ms = m.elems().unwrap();
    let funs = |k: usize| -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..rs.len() {
            v = v.into_iter().flat_map(|t| (0..k).map(move |x| [t.clone(), vec![x]].concat())).collect();
        }
        v
    };
    let id: Vec<usize> = (0..rs.len()).collect();
    for f in funs(ms.len()) {
        for e in funs(rs.len()) {
            for _ in 0..n.size() {
                let fe: Vec<usize> = e.iter().map(|&x| f[x]).collect();
                if fe != f || e != id {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn smp2_axioms_and_triangle() {
    let r = r2();
    let objs = sets(2);
    let p = Smp2 { s: SetSkew::dot(&r) };
    all_pass(&smp2_checks(&p, &objs));
    for v in smc4_verdicts(&p, &objs).unwrap() {
        let m = objs.iter().find(|o| o.name() == v.at[0]).unwrap();
        let n = objs.iter().find(|o| o.name() == v.at[1]).unwrap();
        assert_eq!(v.holds, smc4_by_hand(&r, m, n), "{:?}", v.at);
        assert_eq!(v.holds, m.is_empty() || n.is_empty());
        assert_eq!(v.holds, v.witness.is_none());
    }
    let c = Smp2 { s: SetSkew::cartesian() };
    all_pass(&smp2_checks(&c, &objs));
    assert!(smc4_verdicts(&c, &objs).unwrap().iter().all(|v| v.holds));
}

#[test]
fn free_algebra_is_an_algebra() {
    let s = SetSkew::dot(&r2());
    for m in sets(2) {
        let f = free_algebra(&s, &m).unwrap();
        assert!(matches!(algebra_laws(&s, &f).unwrap(), skewcat::cat::Outcome::Pass));
    }
}

use proptest::prelude::*;

use skewcat::backends::coeq::Coeq;
use skewcat::backends::finset::{Elem, Mor, Obj};
use skewcat::backends::finvec::{FinVec, Mat};
use skewcat::cat::run;
use skewcat::mutate::Mutation;
use skewcat::skewmon::{smc_checks, SetSkew, SkewOps};

fn elem() -> impl Strategy<Value = Elem> {
    let leaf = "[a-z0-9*]{1,3}".prop_map(|s| Elem::atom(&s));
    leaf.prop_recursive(3, 16, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Elem::pair(a, b)),
            prop::collection::vec(inner, 0..3).prop_map(Elem::fun),
        ]
    })
}

fn table(n: usize, m: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..m, n)
}

fn mor(n: usize, m: usize, t: &[usize]) -> Mor {
    let (a, b) = (Obj::range(n), Obj::range(m));
    let bs = b.elems().unwrap();
    Mor::from_table(&a, &b, t.iter().map(|&i| bs[i].clone()).collect()).unwrap()
}

/// Classes of the equivalence generated by `f(x) ~ g(x)`, by repeated
/// relabelling to the smallest member until nothing changes.
fn classes(m: usize, f: &[usize], g: &[usize]) -> usize {
    let mut lab: Vec<usize> = (0..m).collect();
    loop {
        let mut changed = false;
        for (&x, &y) in f.iter().zip(g) {
            let (low, high) = (lab[x].min(lab[y]), lab[x].max(lab[y]));
            for l in lab.iter_mut() {
                if *l == high && high != low {
                    *l = low;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut seen: Vec<usize> = lab.clone();
    seen.sort();
    seen.dedup();
    seen.len()
}

proptest! {
    #[test]
    fn elem_display_round_trips(e in elem()) {
        prop_assert_eq!(Elem::parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn set_coequalizer_matches_closure((n, m, f, g) in (0usize..5, 1usize..6).prop_flat_map(|(n, m)| (Just(n), Just(m), table(n, m), table(n, m)))) {
        let (fm, gm) = (mor(n, m, &f), mor(n, m, &g));
        let q = Coeq::of(&fm, &gm, "Q").unwrap();
        prop_assert_eq!(q.obj.size(), classes(m, &f, &g));
        prop_assert!(q.proj.is_surjective().unwrap());
        for x in fm.dom().elems().unwrap().iter() {
            prop_assert_eq!(q.proj.apply(&fm.apply(x)), q.proj.apply(&gm.apply(x)));
        }
    }

    #[test]
    fn factor_round_trips((n, m, f, g, h) in (0usize..4, 1usize..5).prop_flat_map(|(n, m)| (Just(n), Just(m), table(n, m), table(n, m), table(m, 3)))) {
        let (fm, gm) = (mor(n, m, &f), mor(n, m, &g));
        let q = Coeq::of(&fm, &gm, "Q").unwrap();
        let hm = mor(m, 3, &h);
        let coequalizes = f.iter().zip(&g).all(|(&x, &y)| h[x] == h[y]);
        match q.factor(&hm) {
            Ok(k) => {
                prop_assert!(coequalizes);
                prop_assert!(k.after(&q.proj).equals(&hm).unwrap());
            }
            Err(_) => prop_assert!(!coequalizes),
        }
    }

    #[test]
    fn vec_coequalizer_dimension((a, b, f, g) in (0usize..4, 0usize..4).prop_flat_map(|(a, b)| {
        (Just(a), Just(b), prop::collection::vec(0u32..3, a * b), prop::collection::vec(0u32..3, a * b))
    })) {
        let fv = FinVec::new(3).unwrap();
        let f = Mat::from_rows(3, b, a, f).unwrap();
        let g = Mat::from_rows(3, b, a, g).unwrap();
        let c = fv.coequalizer(&f, &g).unwrap();
        prop_assert_eq!(c.dim, b - f.sub(&g).unwrap().rank());
        prop_assert!(c.proj.mul(&f).unwrap() == c.proj.mul(&g).unwrap());
        prop_assert_eq!(f.rank(), f.transpose().rank());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Moving any single entry of `η` or `ε` at a two-point set is caught by
    /// some coherence check.
    #[test]
    fn single_entry_unitor_mutations_are_caught(eps in any::<bool>(), i in 0usize..64, j in 0usize..64) {
        let r = Obj::atoms("R", &["0", "1"]);
        let objs: Vec<Obj> = (0..=2).map(|k| Obj::atoms(format!("S{k}"), &["a", "b"][..k])).collect();
        let s0 = SetSkew::dot(&r);
        let m = &objs[2];
        let comp = if eps { s0.eps(m).unwrap() } else { s0.eta(m).unwrap() };
        let xs = comp.dom().elems().unwrap();
        let x = xs[i % xs.len()].clone();
        let others: Vec<Elem> = comp.cod().elems().unwrap().iter().filter(|y| **y != comp.apply(&x)).cloned().collect();
        let y = others[j % others.len()].clone();
        let s = SetSkew::dot(&r).with_mutations(vec![Mutation {
            family: if eps { "eps" } else { "eta" }.into(),
            at: vec![m.name().to_string()],
            input: x.to_string(),
            output: y.to_string(),
        }]);
        let caught = smc_checks("smc", &s, &objs).iter().map(run).any(|r| r.failed() && r.witness.is_some());
        prop_assert!(caught);
    }
}

use std::collections::BTreeSet;

use skewcat::backends::coend::{coend, weighted_colimit, SetFunctor, SmallCategory};
use skewcat::backends::coeq::{check_split_fork, same_kernel, Coeq};
use skewcat::backends::enrich::{check_set_enrichment, check_vec_enrichment, EvPatch, SetEnrichment, VecEnrichment};
use skewcat::backends::finset::{fun_to_mor, hom_set, Elem, Mor, Obj};
use skewcat::backends::finvec::{FinVec, Mat, Space};
use skewcat::backends::Copower;
use skewcat::cat::{run, Status};
use skewcat::Error;

fn atoms(name: &str, xs: &[&str]) -> Obj {
    Obj::atoms(name, xs)
}

fn table(dom: &Obj, cod: &Obj, out: &[&str]) -> Mor {
    Mor::from_table(dom, cod, out.iter().map(|s| Elem::atom(s)).collect()).unwrap()
}

fn show(m: &Mor) -> Vec<String> {
    m.table().unwrap().iter().map(|e| e.to_string()).collect()
}

#[test]
fn coequalizer_of_equal_maps_is_trivial() {
    let ab = atoms("AB", &["a", "b"]);
    let q = Coeq::of(&Mor::id(&ab), &Mor::id(&ab), "Q").unwrap();
    assert_eq!(q.obj.size(), 2);
    assert_eq!(show(&q.proj), ["a", "b"]);
}

#[test]
fn coequalizer_classes_use_minimum_representatives() {
    let xy = atoms("XY", &["x", "y"]);
    let abc = atoms("ABC", &["a", "b", "c"]);
    let f = table(&xy, &abc, &["a", "b"]);
    let g = table(&xy, &abc, &["b", "b"]);
    let q = Coeq::of(&f, &g, "Q").unwrap();
    assert_eq!(q.obj.size(), 2);
    assert_eq!(show(&q.proj), ["a", "a", "c"]);

    // shape mismatch
    let h = table(&abc, &abc, &["a", "b", "c"]);
    assert!(matches!(Coeq::of(&f, &h, "Q"), Err(Error::Input(_))));
}

#[test]
fn vec_coequalizer_rank() {
    let fv = FinVec::new(2).unwrap();
    let f = Mat::from_rows(2, 2, 2, vec![1, 0, 0, 0]).unwrap();
    let c = fv.coequalizer(&f, &Mat::zeros(2, 2, 2)).unwrap();
    assert_eq!(c.dim, 1);
    assert_eq!(c.proj.mul(&c.section).unwrap(), Mat::identity(2, 1));
    assert!(fv.coequalizer(&f, &Mat::zeros(2, 1, 2)).is_err());
}

#[test]
fn factoring() {
    let xy = atoms("XY", &["x", "y"]);
    let abc = atoms("ABC", &["a", "b", "c"]);
    let (f, g) = (table(&xy, &abc, &["a", "b"]), table(&xy, &abc, &["b", "b"]));
    let q = Coeq::of(&f, &g, "Q").unwrap();
    let k = q.factor(&q.proj).unwrap();
    assert!(k.equals(&Mor::id(&q.obj)).unwrap());

    let two = atoms("2", &["0", "1"]);
    let h = table(&abc, &two, &["0", "0", "1"]);
    assert!(q.factor(&h).unwrap().after(&q.proj).equals(&h).unwrap());
    let bad = table(&abc, &two, &["0", "1", "1"]);
    match q.factor(&bad) {
        Err(Error::Structural { witness: Some(w), .. }) => assert_eq!((w.input.as_str(), w.lhs.as_str(), w.rhs.as_str()), ("x", "0", "1")),
        other => panic!("expected a structural error, got {:?}", other.map(|_| ())),
    }

    let fv = FinVec::new(3).unwrap();
    let a = Mat::from_rows(3, 2, 1, vec![1, 2]).unwrap();
    let c = fv.coequalizer(&a, &Mat::zeros(3, 2, 1)).unwrap();
    let k = c.factor(&c.proj).unwrap();
    assert_eq!(k, Mat::identity(3, c.dim));
    let bad = Mat::from_rows(3, 1, 2, vec![1, 0]).unwrap();
    assert!(matches!(c.factor(&bad), Err(Error::Structural { .. })));
}

#[test]
fn quotienting_twice_changes_nothing() {
    let xy = atoms("XY", &["x", "y"]);
    let abc = atoms("ABC", &["a", "b", "c"]);
    let q = Coeq::of(&table(&xy, &abc, &["a", "c"]), &table(&xy, &abc, &["c", "c"]), "Q").unwrap();
    let again = Coeq::of(&q.proj, &q.proj, "Q2").unwrap();
    assert!(again.proj.inverse().unwrap().is_some());
}

#[test]
fn split_fork() {
    // B = {a,b,c} onto C = {a,c}, split by the inclusion
    let b = atoms("B", &["a", "b", "c"]);
    let c = atoms("C", &["a", "c"]);
    let e = table(&b, &c, &["a", "a", "c"]);
    let s = table(&c, &b, &["a", "c"]);
    let f = Mor::id(&b);
    let g = s.after(&e);
    let t = Mor::id(&b);
    assert!(check_split_fork(&f, &g, &e, &s, &t).unwrap().is_none());
    let q = Coeq::of(&f, &g, "Q").unwrap().check_section(&t).unwrap();
    assert_eq!(q.obj.size(), c.size());
    assert!(same_kernel(&q.proj, &e).unwrap().is_none());
    // f t = 1 but g t = s e, so t is not a common section
    assert_eq!(q.reflexive, Some(false));
    let r = Coeq::of(&f, &f, "R").unwrap().check_section(&t).unwrap();
    assert_eq!(r.reflexive, Some(true));

    let wrong = table(&c, &b, &["b", "c"]);
    assert!(check_split_fork(&f, &g, &e, &wrong, &t).unwrap().is_some());
}

#[test]
fn copowers() {
    let m = atoms("M", &["x", "y"]);
    assert_eq!(Copower::new(&Obj::empty(), &m).obj.size(), 0);
    let one = Copower::new(&atoms("S", &["s"]), &m);
    assert!(one.inj(&Elem::atom("s")).inverse().unwrap().is_some());
    assert_eq!(Copower::new(&atoms("S", &["0", "1", "2"]), &m).obj.size(), 6);

    let fv = FinVec::new(2).unwrap();
    assert_eq!(fv.copower(0, Space(2)).0, Space(0));
    assert_eq!(fv.copower(3, Space(2)).0, Space(6));

    // the adjunction bijection, both ways round
    let s = atoms("S", &["0", "1"]);
    let cp = Copower::new(&s, &m);
    let n = atoms("N", &["p", "q"]);
    let maps = hom_set(&cp.obj, &n).unwrap();
    assert_eq!(maps.len(), 16);
    for h in &maps {
        let fam = cp.transpose(h).unwrap();
        assert!(cp.untranspose(&fam, &n).equals(h).unwrap());
    }
}

#[test]
fn hom_sets() {
    let ab = atoms("AB", &["a", "b"]);
    let got: BTreeSet<Vec<String>> = hom_set(&ab, &ab).unwrap().iter().map(show).collect();
    let want: BTreeSet<Vec<String>> = [["a", "b"], ["b", "a"], ["a", "a"], ["b", "b"]]
        .iter()
        .map(|t| t.iter().map(|s| s.to_string()).collect())
        .collect();
    assert_eq!(got, want);
    assert_eq!(hom_set(&Obj::empty(), &ab).unwrap().len(), 1);
    assert_eq!(hom_set(&ab, &Obj::empty()).unwrap().len(), 0);

    let three = atoms("3", &["0", "1", "2"]);
    let all = hom_set(&three, &ab).unwrap();
    assert_eq!(all.len(), 8);
    assert_eq!(all.iter().map(show).collect::<BTreeSet<_>>().len(), 8);
    assert_eq!(all.iter().map(show).collect::<Vec<_>>(), hom_set(&three, &ab).unwrap().iter().map(show).collect::<Vec<_>>());

    let f2 = FinVec::new(2).unwrap();
    assert_eq!(f2.hom_set(Space(1), Space(1)).unwrap().len(), 2);
    let f3 = FinVec::new(3).unwrap();
    assert_eq!(f3.hom_set(Space(2), Space(1)).unwrap().len(), 9);

    assert!(matches!(hom_set(&Obj::range(7), &Obj::range(7)), Err(Error::Cap(_))));
    assert!(matches!(f2.hom_set(Space(4), Space(4)), Err(Error::Cap(_))));
}

#[test]
fn coend_over_the_trivial_category_is_the_value() {
    let cat = SmallCategory::trivial();
    let x = atoms("X", &["a", "b", "c"]);
    let x1 = x.clone();
    let value = move |_: usize, _: usize| x1.clone();
    let ident = |_: usize, _: usize| Mor::id(&x);
    let c = coend(&cat, &value, &ident, &ident, "X").unwrap();
    assert_eq!(c.obj().size(), 3);
}

/// Orbits of `U x V` under `(u.e, v) ~ (u, e.v)`, by union-find.
fn tensor_oracle(u: &SetFunctor, v: &SetFunctor) -> usize {
    let us = u.values[0].elems().unwrap();
    let vs = v.values[0].elems().unwrap();
    let idx = |a: &Elem, b: &Elem| us.iter().position(|x| x == a).unwrap() * vs.len() + vs.iter().position(|y| y == b).unwrap();
    let mut uf = petgraph::unionfind::UnionFind::<usize>::new(us.len() * vs.len());
    for k in 0..u.arrows.len() {
        for a in us.iter() {
            for b in vs.iter() {
                uf.union(idx(&u.arrows[k].apply(a), b), idx(a, &v.arrows[k].apply(b)));
            }
        }
    }
    uf.into_labeling().into_iter().collect::<BTreeSet<_>>().len()
}

#[test]
fn tensor_over_a_monoid() {
    let r = atoms("R", &["0", "1"]);
    let e = SmallCategory::endomorphisms(&r).unwrap();
    let ends = Obj::hom(&r, &r).elems().unwrap();
    // R itself as a left E-set, by evaluation
    let v = SetFunctor::covariant("R", vec![r.clone()], ends.iter().map(|f| fun_to_mor(&r, &r, f)).collect());
    let free = SetFunctor::representable(&e, 0);
    let point = SetFunctor::constant(&e, &Obj::point(), true);
    let two = SetFunctor::constant(&e, &r, true);
    for u in [&free, &point, &two] {
        let c = weighted_colimit(&e, u, &v).unwrap();
        assert_eq!(c.obj().size(), tensor_oracle(u, &v), "{}", u.name);
    }
    // free of rank one: E (x)_E V = V
    assert_eq!(weighted_colimit(&e, &free, &v).unwrap().obj().size(), 2);
    assert_eq!(weighted_colimit(&e, &point, &v).unwrap().obj().size(), 1);
}

#[test]
fn set_enrichment() {
    let objs: Vec<Obj> = (0..=3).map(|n| atoms(&format!("S{n}"), &["a", "b", "c"][..n])).collect();
    let en = SetEnrichment::default();
    for r in check_set_enrichment(&en, &objs).iter().map(run) {
        assert_eq!(r.status, Status::Pass, "{} {:?}", r.id, r.witness);
    }

    let small = &objs[..3];
    let broken = SetEnrichment {
        patch: Some(EvPatch {
            m: objs[1].clone(),
            n: objs[2].clone(),
            input: Elem::pair(Elem::fun(vec![Elem::atom("a")]), Elem::atom("a")),
            output: Elem::atom("b"),
        }),
    };
    let failed: Vec<String> = check_set_enrichment(&broken, small).iter().map(run).filter(|r| r.failed()).map(|r| r.id).collect();
    assert!(!failed.is_empty());
}

#[test]
fn vec_enrichment() {
    let dims = [Space(0), Space(1), Space(2)];
    let en = VecEnrichment { fv: FinVec::new(2).unwrap(), patch: None };
    for r in check_vec_enrichment(&en, &dims).iter().map(run) {
        assert_eq!(r.status, Status::Pass, "{} {:?}", r.id, r.witness);
    }
    let broken = VecEnrichment { patch: Some((1, 1, 0, 0)), ..en };
    assert!(check_vec_enrichment(&broken, &dims).iter().map(run).any(|r| r.failed()));
}

use skewcat::backends::finset::{product_mor, Elem, Mor, Obj};
use skewcat::backends::finvec::{FinVec, Space};
use skewcat::backends::{ComposePatch, FinSet};
use skewcat::cat::{check_category_laws, check_functoriality, check_naturality, replay, run, FunctorData, NatFamily, Replay, Status};
use skewcat::skewmon::{SetSkew, SkewOps};
use skewcat::Error;

fn sets(max: usize) -> Vec<Obj> {
    let names = ["a", "b", "c"];
    (0..=max).map(|n| Obj::atoms(format!("S{n}"), &names[..n])).collect()
}

#[test]
fn finset_laws_hold() {
    let cat = FinSet::default();
    let objs = sets(2);
    for r in check_category_laws(&cat, &objs).iter().map(run) {
        assert_eq!(r.status, Status::Pass, "{}", r.id);
        assert!(r.witness.is_none());
    }
}

#[test]
fn finvec_laws_hold() {
    let fv = FinVec::new(2).unwrap();
    let dims = [Space(0), Space(1), Space(2)];
    for r in check_category_laws(&fv, &dims).iter().map(run) {
        assert_eq!(r.status, Status::Pass, "{}", r.id);
    }
}

#[test]
fn corrupted_composition_is_caught_on_a_triple() {
    let (s1, s2) = (Obj::atoms("S1", &["a"]), Obj::atoms("S2", &["a", "b"]));
    let t2 = Obj::atoms("T2", &["x", "y"]);
    let cat = FinSet {
        patch: Some(ComposePatch {
            objs: [s1.clone(), s2.clone(), s2.clone()],
            input: Elem::atom("a"),
            output: Elem::atom("b"),
        }),
    };
    let objs = vec![s1, s2, t2];
    let checks = check_category_laws(&cat, &objs);
    let assoc = checks.iter().find(|c| c.id == "category.assoc").unwrap();
    let r = run(assoc);
    assert_eq!(r.status, Status::Fail);
    let w = r.witness.clone().unwrap();
    assert_eq!(w.case.split(',').count(), 4);
    assert!(w.note.as_deref().unwrap().contains("h = "));
    assert_eq!(replay(assoc, &w), Replay::Reproduced);
}

#[test]
fn caps_turn_into_skips() {
    let cat = FinSet::default();
    let big = vec![Obj::range(7)];
    for r in check_category_laws(&cat, &big).iter().map(run) {
        assert_eq!(r.status, Status::Skipped);
        assert!(r.reason.is_some() && r.witness.is_none());
    }
}

#[test]
fn malformed_descriptors_are_input_errors() {
    assert!(matches!(Elem::parse("(a,"), Err(Error::Input(_))));
    let (a, b) = (Obj::range(2), Obj::range(1));
    assert!(Mor::from_table(&a, &b, vec![Elem::atom("0")]).is_err());
    assert!(Mor::from_table(&a, &b, vec![Elem::atom("0"), Elem::atom("9")]).is_err());
    assert!(FinVec::new(4).is_err());
}

fn identity<'a>() -> FunctorData<'a, FinSet, FinSet> {
    FunctorData::new("id", |x: &Obj| Ok(x.clone()), |f: &Mor| Ok(f.clone()))
}

#[test]
fn functoriality() {
    let cat = FinSet::default();
    let objs = sets(3);
    let id = identity();
    for r in check_functoriality(&id, &cat, &cat, &objs).iter().map(run) {
        assert_eq!(r.status, Status::Pass, "{}", r.id);
    }

    // E x - for E the endomorphisms of a two-point set
    let e = Obj::hom(&objs[2], &objs[2]);
    let e2 = e.clone();
    let t = FunctorData::new("ExX", move |x: &Obj| Ok(Obj::product(&e, x)), move |f: &Mor| Ok(product_mor(&Mor::id(&e2), f)));
    for r in check_functoriality(&t, &cat, &cat, &objs).iter().map(run) {
        assert_eq!(r.status, Status::Pass, "{}", r.id);
    }

    let constant = FunctorData::new(
        "const",
        |x: &Obj| Ok(x.clone()),
        |f: &Mor| {
            let c = f.cod().elems()?.first().cloned();
            Ok(match c {
                Some(c) => Mor::new(f.dom(), f.cod(), move |_| c.clone()),
                None => f.clone(),
            })
        },
    );
    let reps: Vec<_> = check_functoriality(&constant, &cat, &cat, &objs).iter().map(run).collect();
    let ids = reps.iter().find(|r| r.id == "functor.const.identity").unwrap();
    assert_eq!(ids.status, Status::Fail);
    assert_eq!(ids.witness.as_ref().unwrap().case, "S2");
}

fn eta_naturality(r: &Obj, broken: bool) -> (Status, Option<String>) {
    let s = SetSkew::dot(r);
    let cat = FinSet::default();
    let objs = sets(3);
    let id = identity();
    let t = FunctorData::new(
        "T",
        |x: &Obj| s.t(x),
        |f: &Mor| s.t_mor(f, f.dom(), f.cod()),
    );
    let nu = NatFamily {
        name: "eta".into(),
        source: &id,
        target: &t,
        component: Box::new(|m: &Obj| {
            let eta = s.eta(m)?;
            match eta.cod().elems()?.first() {
                Some(c) if broken && m.size() == 2 => {
                    let c = c.clone();
                    Ok(Mor::new(eta.dom(), eta.cod(), move |_| c.clone()))
                }
                _ => Ok(eta),
            }
        }),
    };
    let rep = run(&check_naturality(&nu, &cat, &cat, &objs));
    (rep.status, rep.witness.and_then(|w| w.note))
}

#[test]
fn eta_is_natural() {
    assert_eq!(eta_naturality(&Obj::atoms("R", &["*"]), false).0, Status::Pass);
    assert_eq!(eta_naturality(&Obj::atoms("R", &["0", "1"]), false).0, Status::Pass);
}

#[test]
fn non_natural_component_gives_a_morphism_witness() {
    let (status, note) = eta_naturality(&Obj::atoms("R", &["0", "1"]), true);
    assert_eq!(status, Status::Fail);
    assert!(note.unwrap().starts_with("f = "));
}

#[test]
fn reports_are_deterministic() {
    let cat = FinSet::default();
    let objs = sets(2);
    let strip = |mut r: skewcat::cat::CheckReport| {
        r.timing_ms = 0;
        format!("{r:?}")
    };
    let a: Vec<_> = check_category_laws(&cat, &objs).iter().map(run).map(strip).collect();
    let b: Vec<_> = check_category_laws(&cat, &objs).iter().map(run).map(strip).collect();
    assert_eq!(a, b);
}

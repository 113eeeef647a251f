use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use skewcat::backends::coend::{SetFunctor, SmallCategory};
use skewcat::backends::finset::{Elem, Obj};
use skewcat::backends::finvec::FinVec;
use skewcat::cat::{run, Check, CheckReport, Status};
use skewcat::cocomp::*;
use skewcat::mutate::Mutation;
use skewcat::skewmon::{scan, smc_checks, Class, SkewOps};

fn reports(checks: &[Check]) -> Vec<CheckReport> {
    checks.iter().map(run).collect()
}

fn all_pass(checks: &[Check]) {
    for rep in reports(checks) {
        assert_eq!(rep.status, Status::Pass, "{} : {:?} {:?}", rep.id, rep.witness, rep.reason);
    }
}

fn status_of(reps: &[CheckReport], id: &str) -> Status {
    reps.iter().find(|r| r.id == id).unwrap_or_else(|| panic!("no check {id}")).status
}

fn end2() -> SmallCategory {
    SmallCategory::endomorphisms(&Obj::atoms("R", &["0", "1"])).unwrap()
}

/// Number of classes of `U(*) x V(*)` under `(u·e, v) ~ (u, e·v)` over a
/// one-object category, by flood fill on raw tables. `v` is covariant.
fn one_object_star_size(cat: &SmallCategory, u: &SetFunctor, v: &SetFunctor) -> usize {
    let us = u.values[0].elems().unwrap();
    let vs = v.values[0].elems().unwrap();
    let pts: Vec<(Elem, Elem)> = us.iter().flat_map(|a| vs.iter().map(move |b| (a.clone(), b.clone()))).collect();
    let mut adj: HashMap<(Elem, Elem), Vec<(Elem, Elem)>> = HashMap::new();
    for e in 0..cat.arrows.len() {
        for (a, b) in &pts {
            let l = (u.arrows[e].apply(a), b.clone());
            let r = (a.clone(), v.arrows[e].apply(b));
            adj.entry(l.clone()).or_default().push(r.clone());
            adj.entry(r).or_default().push(l);
        }
    }
    let mut seen = HashSet::new();
    let mut classes = 0;
    for p in &pts {
        if seen.insert(p.clone()) {
            classes += 1;
            let mut stack = vec![p.clone()];
            while let Some(x) = stack.pop() {
                for y in adj.get(&x).into_iter().flatten() {
                    if seen.insert(y.clone()) {
                        stack.push(y.clone());
                    }
                }
            }
        }
    }
    classes
}

#[test]
fn co_yoneda_on_small_categories() {
    for cat in [SmallCategory::trivial(), SmallCategory::walking_arrow(), end2()] {
        let ps = iso_classes(&cat, all_presheaves(&cat, 2).unwrap()).unwrap();
        let mut ds = vec![Diagram::yoneda(&cat)];
        ds.extend(ps.iter().take(4).enumerate().map(|(k, p)| Diagram::constant(&cat, p, format!("K{k}"))));
        for d in &ds {
            for c in 0..cat.objects.len() {
                for m in co_yoneda(&cat, c, d).unwrap() {
                    assert!(m.is_injective().unwrap() && m.is_surjective().unwrap(), "{} at {}", d.name, c);
                }
            }
        }
    }
}

#[test]
fn trivial_category_star_is_product() {
    let cat = SmallCategory::trivial();
    let sets: Vec<SetFunctor> = (0..3)
        .map(|k| SetFunctor::presheaf(format!("S{k}"), vec![Obj::range(k)], vec![skewcat::backends::finset::Mor::id(&Obj::range(k))]))
        .collect();
    for u in &sets {
        for f in &sets {
            let s = star(&cat, u, &Diagram::constant(&cat, f, "F")).unwrap();
            assert_eq!(s.value.values[0].size(), u.values[0].size() * f.values[0].size());
        }
    }
}

#[test]
fn walking_arrow_presheaves_are_self_cocomplete() {
    let cat = SmallCategory::walking_arrow();
    let ps = iso_classes(&cat, all_presheaves(&cat, 2).unwrap()).unwrap();
    // a presheaf on 0 -> 1 is a map P1 -> P0; sizes up to 2 give 8 classes
    assert_eq!(ps.len(), 8);
    let w = SubcategoryW::all("presheaves", ps.clone());
    let mut ds = vec![Diagram::yoneda(&cat)];
    ds.extend(Diagram::all_on(&cat, &[ps[3].clone(), ps[5].clone()], "D").unwrap());
    all_pass(&self_cocomplete_checks(&cat, &w, &ds));
}

#[test]
fn rank_one_free_sets_are_self_cocomplete() {
    let cat = end2();
    let w = SubcategoryW::rank_one(&cat);
    let e = SetFunctor::representable(&cat, 0);
    let ds = Diagram::all_on(&cat, &[e.clone()], "V").unwrap();
    // functors E -> W on E_E are monoid endomorphisms of End(2); count them
    // by brute force over all maps of the 4-element monoid
    let n = cat.arrows.len();
    let id = cat.identities[0];
    let mut homs = 0;
    for code in 0..n.pow(n as u32) {
        let phi: Vec<usize> = (0..n).map(|i| code / n.pow(i as u32) % n).collect();
        let ok = phi[id] == id && (0..n).all(|g| (0..n).all(|f| phi[cat.compose(g, f).unwrap()] == cat.compose(phi[g], phi[f]).unwrap()));
        homs += ok as usize;
    }
    assert_eq!(ds.len(), homs);
    all_pass(&self_cocomplete_checks(&cat, &w, &ds));
    for v in &ds {
        let s = star(&cat, &e, v).unwrap();
        assert_eq!(s.value.values[0].size(), one_object_star_size(&cat, &e, &v.column(&cat, 0)));
        assert_eq!(s.value.values[0].size(), 4);
        assert!(w.contains(&cat, &s.value).unwrap());
    }
}

#[test]
fn pointwise_membership_holds_for_diagrams_outside_w() {
    let cat = end2();
    let w = SubcategoryW::rank_one(&cat);
    let ps = iso_classes(&cat, all_presheaves(&cat, 2).unwrap()).unwrap();
    let ds: Vec<Diagram> = ps.iter().take(5).enumerate().map(|(k, p)| Diagram::constant(&cat, p, format!("K{k}"))).collect();
    let reps = reports(&self_cocomplete_checks(&cat, &w, &ds));
    assert_eq!(status_of(&reps, "cocomp.pointwise-membership"), Status::Pass);
}

#[test]
fn small_dimension_is_not_self_cocomplete() {
    let fv = FinVec::new(2).unwrap();
    let us: Vec<_> = (0..3).map(|d| trivial_module(&fv, d)).collect();
    let f = vec![trivial_module(&fv, 2)];
    let reps = reports(&vec_self_cocomplete_checks(&fv, 3, &us, &f));
    assert_eq!(status_of(&reps, "cocomp.sc-1"), Status::Pass);
    let sc2 = reps.iter().find(|r| r.id == "cocomp.sc-2").unwrap();
    assert_eq!(sc2.status, Status::Fail);
    let w = sc2.witness.as_ref().unwrap();
    assert_eq!(w.input, "U=dim2,F=dim2");
    assert_eq!(w.lhs, "dim4");
}

#[test]
fn bimodules_over_trivial_category_multiply() {
    let cat = SmallCategory::trivial();
    let b = Acu::bimodules(&cat);
    let objs: Vec<Arc<Diagram>> = (0..3)
        .map(|k| {
            let p = SetFunctor::presheaf(format!("S{k}"), vec![Obj::range(k)], vec![skewcat::backends::finset::Mor::id(&Obj::range(k))]);
            Arc::new(Diagram::constant(&cat, &p, format!("S{k}")))
        })
        .collect();
    all_pass(&smc_checks("bimod", &b, &objs));
    assert!(scan(&b, &objs).all_iso());
    for x in &objs {
        for y in &objs {
            assert_eq!(b.tensor(x, y).unwrap().carrier().size(), x.carrier().size() * y.carrier().size());
        }
        assert_eq!(b.unit().carrier().size(), 1);
    }
}

#[test]
fn rank_one_bimodules_are_monoidal() {
    let cat = end2();
    let e = SetFunctor::representable(&cat, 0);
    let ds: Vec<Arc<Diagram>> = Diagram::all_on(&cat, &[e], "V").unwrap().into_iter().take(3).map(Arc::new).collect();
    let b = Acu::bimodules(&cat);
    all_pass(&smc_checks("bimod", &b, &ds));
    assert!(scan(&b, &ds).all_iso());
    assert_eq!(b.unit().at[0].values[0].size(), 4);
}

fn arrow_universe(cat: &SmallCategory, j: &Diagram) -> Vec<Arc<Diagram>> {
    let ps = iso_classes(cat, all_presheaves(cat, 2).unwrap()).unwrap();
    functor_universe(cat, j, &[ps[5].clone()])
}

#[test]
fn acu_on_walking_arrow_is_monoidal() {
    let cat = SmallCategory::walking_arrow();
    let ps = iso_classes(&cat, all_presheaves(&cat, 2).unwrap()).unwrap();
    let acu = Acu::new(&cat, Diagram::yoneda(&cat));
    let fs = arrow_universe(&cat, &acu.j);
    let w = SubcategoryW::all("presheaves", ps);
    let wb = reports(&well_behaved_checks(&acu, &w, &fs));
    for r in &wb {
        assert_eq!(r.status, Status::Pass, "{} {:?}", r.id, r.witness);
    }
    let verdict = WellBehaved::from_reports(&wb);
    assert!(verdict.all());
    let bimod = Acu::bimodules(&cat);
    all_pass(&monoidality_checks(&acu, &bimod, &fs, verdict));
    all_pass(&smc_checks("acu", &acu, &fs));
    let s = scan(&acu, &fs);
    assert!(s.all_iso());
    // J⊗J has the sizes of J
    let jj = acu.tensor(&acu.j, &acu.j).unwrap();
    for c in 0..2 {
        for d in 0..2 {
            assert_eq!(jj.at[c].values[d].size(), acu.j.at[c].values[d].size());
        }
    }
    // the empty functor absorbs on the left
    let empty = fs.iter().find(|f| f.name == "K0").unwrap();
    for g in &fs {
        assert_eq!(acu.tensor(empty, g).unwrap().carrier().size(), 0);
    }
}

#[test]
fn collapsed_unit_breaks_wb1_and_eta() {
    let cat = SmallCategory::walking_arrow();
    let ps = iso_classes(&cat, all_presheaves(&cat, 2).unwrap()).unwrap();
    let acu = Acu::new(&cat, Diagram::collapsed(&cat, 1));
    let fs = arrow_universe(&cat, &acu.j);
    let w = SubcategoryW::all("presheaves", ps);
    let wb = reports(&well_behaved_checks(&acu, &w, &fs));
    let wb1 = wb.iter().find(|r| r.id == "acu.wb-1").unwrap();
    assert_eq!(wb1.status, Status::Fail);
    assert!(wb1.witness.is_some());
    // still skew monoidal
    all_pass(&smc_checks("acu", &acu, &fs));
    let s = scan(&acu, &fs);
    assert!(s.entries.iter().any(|e| e.family == "eta" && e.class != Class::Iso));
}

#[test]
fn rank_one_acu_is_well_behaved() {
    let cat = end2();
    let w = SubcategoryW::rank_one(&cat);
    let acu = Acu::new(&cat, Diagram::yoneda(&cat));
    let e = SetFunctor::representable(&cat, 0);
    let fs: Vec<Arc<Diagram>> = Diagram::all_on(&cat, &[e], "V").unwrap().into_iter().take(3).map(Arc::new).collect();
    let wb = reports(&well_behaved_checks(&acu, &w, &fs));
    for r in &wb {
        assert_eq!(r.status, Status::Pass, "{} {:?}", r.id, r.witness);
    }
    let bimod = Acu::bimodules(&cat);
    all_pass(&monoidality_checks(&acu, &bimod, &fs, WellBehaved::from_reports(&wb)));
}

#[test]
fn comparison_mutation_breaks_wb3() {
    let cat = SmallCategory::walking_arrow();
    let ps = iso_classes(&cat, all_presheaves(&cat, 2).unwrap()).unwrap();
    let clean = Acu::new(&cat, Diagram::yoneda(&cat));
    let fs = arrow_universe(&cat, &clean.j);
    let (u, g) = (&ps[7], &fs[0]);
    let cmp = clean.comparison(u, g).unwrap();
    let (k, m) = cmp.iter().enumerate().find(|(_, m)| m.cod().size() >= 2 && m.dom().size() >= 1).unwrap();
    let x = m.dom().elems().unwrap()[0].clone();
    let y = m.cod().elems().unwrap().iter().find(|y| **y != m.apply(&x)).unwrap().clone();
    let mu = Mutation {
        family: "J".into(),
        at: vec![u.name.clone(), g.name.clone(), cat.objects[k].clone()],
        input: x.to_string(),
        output: y.to_string(),
    };
    let acu = Acu::new(&cat, Diagram::yoneda(&cat)).with_mutations(vec![mu]);
    let w = SubcategoryW::all("presheaves", ps.clone());
    let reps = reports(&well_behaved_checks(&acu, &w, &fs));
    assert_eq!(status_of(&reps, "acu.wb-3"), Status::Fail);
}

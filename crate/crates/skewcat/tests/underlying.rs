use skewcat::backends::finset::{Elem, Obj};
use skewcat::cat::{run, Check, Status};
use skewcat::modcat::{algebras, EmObj, EmUniverse, Lifted, EMQuot};
use skewcat::mutate::Mutation;
use skewcat::skewmon::{classify, Class, SetSkew, SkewFunctor, SkewOps};
use skewcat::underlying::*;

fn sets(max: usize) -> Vec<Obj> {
    let atoms = ["a", "b", "c"];
    (0..=max).map(|k| Obj::atoms(format!("S{k}"), &atoms[..k])).collect()
}

fn r_of(n: usize) -> Obj {
    let atoms = ["0", "1", "2"];
    Obj::atoms("R", &atoms[..n])
}

fn all_pass(checks: &[Check]) {
    for c in checks {
        let rep = run(c);
        assert_eq!(rep.status, Status::Pass, "{} failed: {:?} {:?}", rep.id, rep.witness, rep.reason);
    }
}

fn universe(s: &SetSkew, sets_max: usize, alg_max: usize) -> EmUniverse<Obj> {
    let base = sets(sets_max);
    let algs = base.iter().take(alg_max + 1).flat_map(|m| algebras(s, m).unwrap()).collect();
    EmUniverse::new(base, algs)
}

#[test]
fn underlying_r2() {
    let u = Underlying::new(&r_of(2), vec![]).unwrap();
    let uni = universe(&u.dot, 2, 2);
    all_pass(&underlying_checks(&u, &uni));
}

#[test]
fn underlying_r1_is_cartesian_like() {
    let u = Underlying::new(&r_of(1), vec![]).unwrap();
    let uni = universe(&u.dot, 2, 2);
    all_pass(&underlying_checks(&u, &uni));
    // one action per carrier, every coherence invertible
    assert_eq!(uni.algs.len(), 3);
    for a in &uni.algs {
        for b in &uni.algs {
            for c in &uni.algs {
                assert_eq!(classify(&u.em.gamma(a, b, c).unwrap()).unwrap().0, Class::Iso);
            }
        }
        assert_eq!(classify(&u.em.eps(a).unwrap()).unwrap().0, Class::Iso);
    }
}

/// Brute force: every map `Hom(R,M) -> Hom(R,N)` commuting with
/// precomposition, counted against `|Hom(M,N)|`.
fn equivariant_count(r: &Obj, m: &Obj, n: &Obj) -> usize {
    let hm = Obj::hom(r, m).elems().unwrap();
    let hn = Obj::hom(r, n).elems().unwrap();
    let ends = Obj::hom(r, r).elems().unwrap();
    let comp = |f: &Elem, e: &Elem| skewcat::backends::finset::compose_fun(r, f, e);
    let total = hn.len().pow(hm.len() as u32);
    let mut count = 0;
    for code in 0..total {
        let mut c = code;
        let phi: Vec<usize> = (0..hm.len())
            .map(|_| {
                let v = c % hn.len();
                c /= hn.len();
                v
            })
            .collect();
        let at = |f: &Elem| &hn[phi[hm.iter().position(|x| x == f).unwrap()]];
        if hm.iter().all(|f| ends.iter().all(|e| *at(&comp(f, e)) == comp(at(f), e))) {
            count += 1;
        }
    }
    count
}

#[test]
fn density_against_brute_force() {
    for k in [0, 1, 2] {
        let r = r_of(k);
        let u = Underlying::new(&r, vec![]).unwrap();
        for m in sets(2) {
            for n in sets(2) {
                let dense = matches!(density(&u, &m, &n).unwrap(), skewcat::cat::Outcome::Pass);
                let homs = n.size().pow(m.size() as u32);
                // J is injective on maps unless R is empty and N has two points
                let faithful = k > 0 || homs <= 1;
                assert_eq!(dense, faithful && equivariant_count(&r, &m, &n) == homs, "R={k} {m} {n}");
            }
        }
    }
    // R = ∅ fails once there are two maps to tell apart
    let u = Underlying::new(&r_of(0), vec![]).unwrap();
    assert!(!is_dense(&u, &sets(2)).unwrap());
    let u = Underlying::new(&r_of(2), vec![]).unwrap();
    assert!(is_dense(&u, &sets(3)).unwrap());
}

#[test]
fn coend_tensor_size() {
    // dot |R|=2, N = {a,b} plain, A = {a,b} with E acting by evaluation-like action
    // counted by union-find over E x M by hand
    let u = Underlying::new(&r_of(2), vec![]).unwrap();
    let m = sets(2)[2].clone();
    for a in algebras(&u.dot, &m).unwrap() {
        let q = u.em.tensor(&EmObj::Plain(sets(1)[1].clone()), &EmObj::Alg(a.clone())).unwrap();
        // with a one-point N every f is constant, so classes are E-orbits
        let mut parent: Vec<usize> = (0..2).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        let ms = m.elems().unwrap();
        for x in a.act.dom().elems().unwrap().iter() {
            let i = ms.iter().position(|y| y == x.snd()).unwrap();
            let j = ms.iter().position(|y| *y == a.act.apply(x)).unwrap();
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            parent[ri] = rj;
        }
        let orbits = (0..2).filter(|&i| find(&mut parent, i) == i).count();
        assert_eq!(q.under().size(), orbits, "{}", a.name);
    }
}

#[test]
fn forg_on_dot_and_cartesian() {
    for s in [SetSkew::dot(&r_of(2)), SetSkew::cartesian()] {
        let sg = Sigma::new(&s);
        let src = Lifted::new(EMQuot::new(s.clone()));
        let tgt = Lifted::new(EMQuot::new(sg.dot.clone()));
        let uni = universe(&s, 2, 2);
        let f = forg(&sg, &src, &tgt);
        all_pass(&forg_checks(&sg, &f, &uni));
        if s.is_dot() {
            // Forg sends each algebra to itself
            for a in &uni.algs {
                let fa = f.obj(a).unwrap();
                let (x, y) = (a.alg().unwrap(), fa.alg().unwrap());
                assert!(x.act.equals(&y.act.retype(x.act.dom(), x.act.cod())).unwrap());
            }
        }
    }
}

#[test]
fn sigma_mutation_breaks_monad_morphism() {
    let r = r_of(2);
    let s = SetSkew::dot(&r).with_mutations(vec![Mutation {
        family: "sigma".into(),
        at: vec!["R".into(), "S1".into()],
        input: "([0,0],a)".into(),
        output: "([1,1],a)".into(),
    }]);
    let sg = Sigma::new(&s);
    let src = Lifted::new(EMQuot::new(s.clone()));
    let tgt = Lifted::new(EMQuot::new(sg.dot.clone()));
    let uni = universe(&s, 1, 1);
    let f = forg(&sg, &src, &tgt);
    let reps: Vec<_> = forg_checks(&sg, &f, &uni).iter().map(run).collect();
    let mm = reps.iter().find(|r| r.id == "forg.sigma-monad-morphism").unwrap();
    assert_eq!(mm.status, Status::Fail);
    assert!(mm.witness.is_some());
}

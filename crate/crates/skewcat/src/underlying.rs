//! E-objects for `E = End(R)` and their tensor `M⊗̲N = JM ⊗_E N`, computed
//! as the horizontal tensor of the dot structure and cross-checked against
//! coends over `E`; the comparison `σ` from a structure `⊛` to the dot
//! structure, the forgetful functor it induces, and its strength.

use std::collections::HashMap;

use crate::backends::coend::{weighted_colimit, Coend, SetFunctor, SmallCategory};
use crate::backends::coeq::{same_kernel, Coeq};
use crate::backends::finset::{compose_fun, eval_fun, hom_set, id_fun, post_fun, Elem, Mor, Obj};
use crate::cat::{compare, equation, Check, Outcome, Witness};
use crate::error::{Error, Result};
use crate::modcat::{algebra_laws, Em, EmObj, EmUniverse, LiftFunctor, Lifted, EMQuot, TAlg};
use crate::mutate::{mutate, Mutation};
use crate::skewmon::set::{v_assoc, v_lunit};
use crate::skewmon::{chain, classify, functor_checks, tuples, Class, SetSkew, SkewFunctor, SkewOps};

/// The dot structure on `R`, its E-objects and the coend description.
pub struct Underlying {
    pub dot: SetSkew,
    pub em: Em<SetSkew>,
    pub cat: SmallCategory,
    r: Obj,
    ends: Vec<Elem>,
}

impl Underlying {
    pub fn new(r: &Obj, muts: Vec<Mutation>) -> Result<Underlying> {
        let dot = SetSkew::dot(r).with_mutations(muts.clone());
        let r = dot.unit();
        let ends = dot.endo().elems()?.to_vec();
        Ok(Underlying {
            em: Lifted::new(EMQuot::new(dot.clone()).with_mutations(muts)),
            cat: SmallCategory::endomorphisms(&r)?,
            dot,
            r,
            ends,
        })
    }

    pub fn r(&self) -> &Obj {
        &self.r
    }

    pub fn endo(&self) -> Obj {
        self.dot.endo()
    }

    /// `JM = Hom(R,M)` with `E` acting by precomposition.
    pub fn j(&self, m: &Obj) -> SetFunctor {
        let hm = Obj::hom(&self.r, m);
        let arrows = self
            .ends
            .iter()
            .map(|e| {
                let (r, e) = (self.r.clone(), e.clone());
                Mor::new(&hm, &hm, move |f| compose_fun(&r, f, &e))
            })
            .collect();
        SetFunctor::presheaf(format!("J{}", m.name()), vec![hm], arrows)
    }

    /// An E-object as a functor on the one-object category `E`.
    pub fn as_functor(&self, a: &TAlg<Obj>) -> SetFunctor {
        let arrows = self
            .ends
            .iter()
            .map(|e| {
                let (act, e) = (a.act.clone(), e.clone());
                Mor::new(&a.obj, &a.obj, move |n| act.apply(&Elem::pair(e.clone(), n.clone())))
            })
            .collect();
        SetFunctor::covariant(a.name.clone(), vec![a.obj.clone()], arrows)
    }

    /// `JL ⊗_E N` as a coend over `E`.
    pub fn coend(&self, l: &Obj, n: &TAlg<Obj>) -> Result<Coend> {
        weighted_colimit(&self.cat, &self.j(l), &self.as_functor(n))
    }

    /// The comparison from the horizontal tensor to the coend: both are
    /// quotients of `Hom(R,L) x N`, and the horizontal tensor's elements
    /// are representatives.
    pub fn kappa(&self, l: &EmObj<Obj>, n: &EmObj<Obj>) -> Result<(Mor, Coend)> {
        let nt = n.alg().ok_or_else(|| Error::input("right factor must be an E-object"))?;
        let c = self.coend(l.under(), nt)?;
        let q = self.em.tensor(l, n)?;
        let (cat, proj) = (self.cat.clone(), c.coeq.proj.clone());
        let k = Mor::new(q.under(), c.obj(), move |x| proj.apply(&Elem::pair(Elem::atom(&cat.objects[0]), x.clone())));
        Ok((k, c))
    }
}

fn fail_note(o: Outcome, note: &str) -> Outcome {
    match o {
        Outcome::Fail(w) => Outcome::Fail(w.with_note(note)),
        o => o,
    }
}

fn iso_outcome(m: &Mor, what: &str) -> Result<Outcome> {
    let (class, w) = classify(m)?;
    Ok(match class {
        Class::Iso => Outcome::Pass,
        _ => Outcome::Fail(w.unwrap_or_else(|| Witness::new("-", "-", "-")).with_note(format!("{what} is {class}"))),
    })
}

/// Monoid laws of `E` under composition, exhaustively.
pub fn e_monoid_check(r: &Obj) -> Result<Outcome> {
    let e = Obj::hom(r, r);
    let elems = e.elems()?;
    let id = id_fun(r)?;
    for f in elems.iter() {
        if compose_fun(r, f, &id) != *f || compose_fun(r, &id, f) != *f {
            return Ok(Outcome::Fail(Witness::new(f, compose_fun(r, f, &id), f).with_note("unit law")));
        }
        for g in elems.iter() {
            for h in elems.iter() {
                let l = compose_fun(r, &compose_fun(r, f, g), h);
                let rr = compose_fun(r, f, &compose_fun(r, g, h));
                if l != rr {
                    return Ok(Outcome::Fail(Witness::new(format!("({f},{g},{h})"), l, rr).with_note("associativity")));
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

/// The pair defining `L⊗̲N` is `(f,(e,n)) ↦ (f∘e, n)` and `(f, e·n)`.
pub fn pair_formula(u: &Underlying, l: &Obj, n: &TAlg<Obj>) -> Result<Outcome> {
    let (f, g) = u.em.q.pair(l, n)?;
    let r = u.r.clone();
    let lhs = Mor::new(f.dom(), f.cod(), move |x| Elem::pair(compose_fun(&r, x.fst(), x.snd().fst()), x.snd().snd().clone()));
    let act = n.act.clone();
    let rhs = Mor::new(g.dom(), g.cod(), move |x| Elem::pair(x.fst().clone(), act.apply(x.snd())));
    let o = compare(&f, &lhs)?;
    if !matches!(o, Outcome::Pass) {
        return Ok(fail_note(o, "μ leg"));
    }
    Ok(fail_note(compare(&g, &rhs)?, "action leg"))
}

/// The horizontal tensor and the coend have the same classes.
pub fn coend_agrees(u: &Underlying, l: &EmObj<Obj>, n: &EmObj<Obj>) -> Result<Outcome> {
    let (k, c) = u.kappa(l, n)?;
    let pi = u.em.proj(l, n)?;
    let tagged = {
        let (cat0, proj) = (u.cat.objects[0].clone(), c.coeq.proj.clone());
        Mor::new(pi.dom(), c.obj(), move |x| proj.apply(&Elem::pair(Elem::atom(&cat0), x.clone())))
    };
    if let Some((x, y)) = same_kernel(&pi, &tagged)? {
        return Ok(Outcome::Fail(
            Witness::new(format!("{x} ~ {y}"), pi.apply(&x) == pi.apply(&y), tagged.apply(&x) == tagged.apply(&y))
                .with_note("quotients differ"),
        ));
    }
    iso_outcome(&k, "comparison with the coend")
}

/// `η̲_M = l : m ↦ [1⊗m]`, `ε̲_M = ev : [g⊗r] ↦ g(r)`, and
/// `γ̲ : [f⊗[g⊗n]] ↦ [(r ↦ [f⊗g(r)])⊗n]`, each evaluated on the coend
/// side and compared through the comparison maps.
pub fn formula_eta(u: &Underlying, m: &EmObj<Obj>) -> Result<Outcome> {
    let r = u.em.unit();
    let (k, c) = u.kappa(&r, m)?;
    let eta = u.em.eta(m)?;
    let id = id_fun(&u.r)?;
    let closed = {
        let p = c.coeq.proj.clone();
        let t = Elem::atom(&u.cat.objects[0]);
        Mor::new(eta.dom(), c.obj(), move |x| p.apply(&Elem::pair(t.clone(), Elem::pair(id.clone(), x.clone()))))
    };
    compare(&chain(&[eta, k])?, &closed)
}

pub fn formula_eps(u: &Underlying, m: &EmObj<Obj>) -> Result<Outcome> {
    let r = u.em.unit();
    let (k, c) = u.kappa(m, &r)?;
    let eps = u.em.eps(m)?;
    let rr = u.r.clone();
    // the closed form on coend classes, read off any representative
    let closed = Mor::new(c.obj(), eps.cod(), move |x| {
        let y = x.snd();
        eval_fun(&rr, y.fst(), y.snd())
    });
    compare(&eps, &chain(&[k, closed])?)
}

pub fn formula_gamma(u: &Underlying, l: &EmObj<Obj>, m: &EmObj<Obj>, n: &EmObj<Obj>) -> Result<Outcome> {
    let em = &u.em;
    let (k_lm, _) = u.kappa(l, m)?;
    // the outer coend J(L⊗̲M) ⊗_E N, with L⊗̲M carried by the coend classes
    let lm_co_obj = k_lm.cod().clone();
    let nt = n.alg().ok_or_else(|| Error::input("γ̲ needs E-objects"))?;
    let outer = u.coend(&lm_co_obj, nt)?;
    // raw L⊛(M⊛N) in the dot structure, sent both ways
    let p = em.p_right(l, m, n)?;
    let g = em.gamma(l, m, n)?;
    let kl = k_lm.clone();
    let t = Elem::atom(&u.cat.objects[0]);
    let (op, t2) = (outer.coeq.proj.clone(), t.clone());
    // (h, n) in (L⊗̲M)⊗̲N, h: R -> L⊗̲M, moved to the coend side pointwise
    let via_em = Mor::new(g.cod(), outer.obj(), move |y| {
        let h = post_fun(&kl, y.fst());
        op.apply(&Elem::pair(t2.clone(), Elem::pair(h, y.snd().clone())))
    });
    let (klm, op2, t3) = (k_lm.clone(), outer.coeq.proj.clone(), t);
    let pi_lm = em.proj(l, m)?;
    let closed = Mor::new(p.dom(), outer.obj(), move |x| {
        let f = x.fst();
        let (gg, nn) = (x.snd().fst(), x.snd().snd());
        let h = Elem::fun(gg.table().iter().map(|gr| klm.apply(&pi_lm.apply(&Elem::pair(f.clone(), gr.clone())))).collect());
        op2.apply(&Elem::pair(t3.clone(), Elem::pair(h, nn.clone())))
    });
    compare(&chain(&[p, g, via_em])?, &closed)
}

/// `Hom(M,N) -> Hom_E(JM,JN)` is a bijection, with the E-maps found by
/// search with propagation along the E-orbits.
pub fn density(u: &Underlying, m: &Obj, n: &Obj) -> Result<Outcome> {
    let r = &u.r;
    let (hm, hn) = (Obj::hom(r, m), Obj::hom(r, n));
    let (xs, ys) = (hm.elems()?, hn.elems()?);
    let ends = &u.ends;
    let mut sols: Vec<Vec<usize>> = Vec::new();
    let idx = |f: &Elem| xs.iter().position(|x| x == f).expect("element of Hom(R,M)");
    fn go(
        k: usize,
        phi: &mut Vec<Option<usize>>,
        xs: &[Elem],
        ys: &[Elem],
        ends: &[Elem],
        r: &Obj,
        idx: &dyn Fn(&Elem) -> usize,
        sols: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        if sols.len() > cap {
            return Err(Error::Cap(format!("more than {cap} E-maps")));
        }
        if k == xs.len() {
            sols.push(phi.iter().map(|v| v.expect("assigned")).collect());
            return Ok(());
        }
        if phi[k].is_some() {
            return go(k + 1, phi, xs, ys, ends, r, idx, sols, cap);
        }
        'cand: for v in 0..ys.len() {
            let saved = phi.clone();
            for e in ends {
                let src = idx(&compose_fun(r, &xs[k], e));
                let tgt = compose_fun(r, &ys[v], e);
                let ti = ys.iter().position(|y| *y == tgt).expect("element of Hom(R,N)");
                match phi[src] {
                    Some(w) if w != ti => {
                        *phi = saved;
                        continue 'cand;
                    }
                    _ => phi[src] = Some(ti),
                }
            }
            go(k + 1, phi, xs, ys, ends, r, idx, sols, cap)?;
            *phi = saved;
        }
        Ok(())
    }
    let mut phi = vec![None; xs.len()];
    go(0, &mut phi, &xs, &ys, ends, r, &idx, &mut sols, crate::limits::max_hom())?;
    let homs = hom_set(m, n)?;
    let mut hit: HashMap<Vec<usize>, Elem> = HashMap::new();
    for h in &homs {
        let img: Vec<usize> = xs.iter().map(|f| ys.iter().position(|y| *y == post_fun(h, f)).expect("in Hom(R,N)")).collect();
        let name = Elem::fun(h.table()?);
        if let Some(other) = hit.insert(img, name.clone()) {
            return Ok(Outcome::Fail(Witness::new(format!("{other} , {name}"), "same E-map", "-").with_note("J is not faithful")));
        }
    }
    match sols.iter().find(|s| !hit.contains_key(*s)) {
        None => Ok(Outcome::Pass),
        Some(s) => {
            let table = s.iter().map(|&i| ys[i].to_string()).collect::<Vec<_>>().join(";");
            Ok(Outcome::Fail(Witness::new(table, "E-map", "not in the image of J").with_note("J is not full")))
        }
    }
}

/// The E-objects `J L ⊗_E JM` and the strength `[f⊗g] ↦ (r ↦ [f⊗g(r)])`
/// tensored with `N`: whether it is invertible.
pub fn jstrength_iso(u: &Underlying, l: &EmObj<Obj>, m: &EmObj<Obj>, n: &EmObj<Obj>) -> Result<bool> {
    let (ma, na) = (
        m.alg().ok_or_else(|| Error::input("expected an E-object"))?,
        n.alg().ok_or_else(|| Error::input("expected an E-object"))?,
    );
    let r = u.r.clone();
    let (hl, hm) = (Obj::hom(&r, l.under()), Obj::hom(&r, &ma.obj));
    let dom = Obj::product(&Obj::product(&hl, &hm), &na.obj);
    let e = u.endo();
    let rel = Obj::product(&e, &dom);
    let (r1, r2, r4) = (r.clone(), r.clone(), ma.act.clone());
    // (f∘e, g, n) ~ (f, e·g, n) and (f, g∘e, n) ~ (f, g, e·n)
    let a1 = Mor::new(&rel, &dom, move |x| {
        let (ee, y) = (x.fst(), x.snd());
        Elem::pair(Elem::pair(compose_fun(&r1, y.fst().fst(), ee), y.fst().snd().clone()), y.snd().clone())
    });
    let b1 = Mor::new(&rel, &dom, move |x| {
        let (ee, y) = (x.fst(), x.snd());
        let g = Elem::fun(y.fst().snd().table().iter().map(|gr| r4.apply(&Elem::pair(ee.clone(), gr.clone()))).collect());
        Elem::pair(Elem::pair(y.fst().fst().clone(), g), y.snd().clone())
    });
    let a2 = Mor::new(&rel, &dom, move |x| {
        let (ee, y) = (x.fst(), x.snd());
        Elem::pair(Elem::pair(y.fst().fst().clone(), compose_fun(&r2, y.fst().snd(), ee)), y.snd().clone())
    });
    let nact = na.act.clone();
    let b2 = Mor::new(&rel, &dom, move |x| {
        let (ee, y) = (x.fst(), x.snd());
        Elem::pair(y.fst().clone(), nact.apply(&Elem::pair(ee.clone(), y.snd().clone())))
    });
    let c = Coeq::joint(&dom, vec![(a1, b1), (a2, b2)], "JLJMN")?;
    let lm = u.em.tensor(l, m)?;
    let pi_lm = u.em.proj(l, m)?;
    let outer = u.em.proj(&lm, n)?;
    let cod = outer.cod().clone();
    let h = Mor::new(&dom, &cod, move |x| {
        let (f, g) = (x.fst().fst(), x.fst().snd());
        let col = Elem::fun(g.table().iter().map(|gr| pi_lm.apply(&Elem::pair(f.clone(), gr.clone()))).collect());
        outer.apply(&Elem::pair(col, x.snd().clone()))
    });
    let s = c.factor(&h)?;
    Ok(classify(&s)?.0 == Class::Iso)
}

/// The underlying battery over a universe of sets and E-objects.
pub fn underlying_checks<'a>(u: &'a Underlying, uni: &'a EmUniverse<Obj>) -> Vec<Check<'a>> {
    let em = &u.em;
    let mut out = Vec::new();
    out.push(Check::single("underlying.E-monoid", u.r.name().to_string(), move || Outcome::from_result(e_monoid_check(&u.r))));

    let cases = uni.algs.iter().map(|a| em.label(a)).collect();
    out.push(Check::new("underlying.E-objects", cases, move |i| {
        Outcome::from_result(algebra_laws(&u.dot, uni.algs[i].alg().expect("E-object")))
    }));

    let all = uni.all();
    let lefts: Vec<(usize, usize)> = (0..all.len()).flat_map(|l| (0..uni.algs.len()).map(move |n| (l, n))).collect();
    let lab = |xs: &[&EmObj<Obj>]| xs.iter().map(|x| em.label(x)).collect::<Vec<_>>().join(",");
    let cases: Vec<String> = lefts.iter().map(|&(l, n)| lab(&[&all[l], &uni.algs[n]])).collect();
    let (lf, all2) = (lefts.clone(), all.clone());
    out.push(Check::new("underlying.pair", cases.clone(), move |i| {
        let (l, n) = lf[i];
        Outcome::from_result(pair_formula(u, all2[l].under(), uni.algs[n].alg().expect("E-object")))
    }));
    let all3 = all.clone();
    out.push(Check::new("underlying.coend", cases, move |i| {
        let (l, n) = lefts[i];
        Outcome::from_result(coend_agrees(u, &all3[l], &uni.algs[n]))
    }));

    let cases: Vec<String> = uni.algs.iter().map(|a| em.label(a)).collect();
    out.push(Check::new("underlying.formula-eta", cases.clone(), move |i| Outcome::from_result(formula_eta(u, &uni.algs[i]))));
    out.push(Check::new("underlying.formula-eps", cases.clone(), move |i| Outcome::from_result(formula_eps(u, &uni.algs[i]))));
    out.push(Check::new("underlying.eta-iso", cases.clone(), move |i| {
        Outcome::from_result(em.eta(&uni.algs[i]).and_then(|m| iso_outcome(&m, "η̲")))
    }));

    let triples = tuples(uni.algs.len(), 3);
    let tcases: Vec<String> = triples.iter().map(|t| lab(&[&uni.algs[t[0]], &uni.algs[t[1]], &uni.algs[t[2]]])).collect();
    let t1 = triples.clone();
    out.push(Check::new("underlying.formula-gamma", tcases.clone(), move |i| {
        let t = &t1[i];
        Outcome::from_result(formula_gamma(u, &uni.algs[t[0]], &uni.algs[t[1]], &uni.algs[t[2]]))
    }));
    out.push(Check::new("underlying.gamma-iso-iff-strength", tcases, move |i| {
        let t = &triples[i];
        let (l, m, n) = (&uni.algs[t[0]], &uni.algs[t[1]], &uni.algs[t[2]]);
        Outcome::from_result((|| {
            let g = classify(&em.gamma(l, m, n)?)?.0 == Class::Iso;
            let s = jstrength_iso(u, l, m, n)?;
            Ok(Outcome::when(g == s, || Witness::new("-", format!("γ̲ iso: {g}"), format!("strength iso: {s}"))))
        })())
    }));

    let pairs = tuples(uni.base.len(), 2);
    let pcases: Vec<String> = pairs.iter().map(|p| format!("{},{}", uni.base[p[0]].name(), uni.base[p[1]].name())).collect();
    let p1 = pairs.clone();
    out.push(Check::new("underlying.density", pcases, move |i| {
        Outcome::from_result(density(u, &uni.base[p1[i][0]], &uni.base[p1[i][1]]))
    }));
    out.push(Check::new("underlying.eps-iso-if-dense", cases, move |i| {
        Outcome::from_result((|| {
            for p in &pairs {
                if !matches!(density(u, &uni.base[p[0]], &uni.base[p[1]])?, Outcome::Pass) {
                    return Ok(Outcome::Skip("R is not dense on the universe".into()));
                }
            }
            iso_outcome(&em.eps(&uni.algs[i])?, "ε̲")
        })())
    }));
    out
}

/// Whether `R` is dense on the universe.
pub fn is_dense(u: &Underlying, objs: &[Obj]) -> Result<bool> {
    for m in objs {
        for n in objs {
            if !matches!(density(u, m, n)?, Outcome::Pass) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---- σ, Σ and Forg ----

/// `Σ : (M,⊛,R) -> (M,•,R)`, the identity on objects and maps, with
/// `Σ₂ = σ_{M,N} = (ev⊛N)∘Γ_{HM,R,N}∘(HM⊗η_N) : M•N -> M⊛N` and `Σ₀ = 1`.
pub struct Sigma {
    pub s: SetSkew,
    pub dot: SetSkew,
}

impl Sigma {
    pub fn new(s: &SetSkew) -> Sigma {
        Sigma {
            s: s.clone(),
            dot: SetSkew::dot(&s.unit()).with_mutations(s.muts.clone()),
        }
    }

    pub fn sigma(&self, m: &Obj, n: &Obj) -> Result<Mor> {
        let s = &self.s;
        let r = s.unit();
        let hm = Obj::hom(&r, m);
        let first = crate::backends::finset::product_mor(&Mor::id(&hm), &s.eta(n)?);
        let dom = self.dot.tensor(m, n)?;
        let first = first.retype(&dom, first.cod());
        let gamma = s.strength(&hm, &r, n)?;
        let ev = s.whisker_left(&s.ev(m), &Obj::product(&hm, &r), m, n)?;
        let sig = chain(&[first, gamma, ev])?;
        mutate(&s.muts, "sigma", &[m.name().to_string(), n.name().to_string()], sig.tabulate()?)
    }

    /// `σ_N = σ_{R,N} : E⊗N -> TN`.
    pub fn sigma_n(&self, n: &Obj) -> Result<Mor> {
        self.sigma(&self.s.unit(), n)
    }

    /// `λ_{M,N} = (ev_{R,M}⊛N)∘Γ_{HM,R,N} : M•TN -> M⊛N`.
    pub fn lambda(&self, m: &Obj, n: &Obj) -> Result<Mor> {
        let s = &self.s;
        let r = s.unit();
        let hm = Obj::hom(&r, m);
        let ev = s.whisker_left(&s.ev(m), &Obj::product(&hm, &r), m, n)?;
        let gamma = s.strength(&hm, &r, n)?;
        let dom = self.dot.tensor(m, &s.t(n)?)?;
        chain(&[gamma.retype(&dom, gamma.cod()), ev])
    }
}

impl SkewFunctor for Sigma {
    type S = SetSkew;
    type T = SetSkew;

    fn name(&self) -> String {
        "Sigma".into()
    }

    fn src(&self) -> &SetSkew {
        &self.s
    }

    fn tgt(&self) -> &SetSkew {
        &self.dot
    }

    fn obj(&self, a: &Obj) -> Result<Obj> {
        Ok(a.clone())
    }

    fn fmap(&self, f: &Mor, _a: &Obj, _b: &Obj) -> Result<Mor> {
        Ok(f.clone())
    }

    fn f2(&self, a: &Obj, b: &Obj) -> Result<Mor> {
        self.sigma(a, b)
    }

    fn f0(&self) -> Result<Mor> {
        Ok(Mor::id(&self.s.unit()))
    }
}

/// `μ_N∘σ_{TN}∘(E⊗σ_N) = σ_N∘(c⊗N)∘a` and `σ_N∘(i⊗N)∘l = η_N`.
pub fn sigma_monad_morphism(sg: &Sigma, n: &Obj) -> Result<Outcome> {
    let s = &sg.s;
    let r = s.unit();
    let e = sg.s.endo();
    let tn = s.t(n)?;
    let en = sg.dot.tensor(&r, n)?;
    let e_en = Obj::product(&e, &en);
    let lhs = chain(&[
        crate::backends::finset::product_mor_on(&e_en, &sg.dot.tensor(&r, &tn)?, &Mor::id(&e), &sg.sigma_n(n)?),
        sg.sigma_n(&tn)?,
        s.mu(n)?,
    ])?;
    let rr = r.clone();
    let comp = Mor::new(&Obj::product(&Obj::product(&e, &e), n), &en, move |x| {
        Elem::pair(compose_fun(&rr, x.fst().fst(), x.fst().snd()), x.snd().clone())
    });
    let rhs = chain(&[v_assoc(&e, &e, n).retype(&e_en, &Obj::product(&Obj::product(&e, &e), n)), comp, sg.sigma_n(n)?])?;
    let o = compare(&lhs, &rhs)?;
    if !matches!(o, Outcome::Pass) {
        return Ok(fail_note(o, "multiplication"));
    }
    let id = id_fun(&r)?;
    let unit = chain(&[
        v_lunit(n),
        Mor::new(&Obj::product(&crate::skewmon::set::v_unit(), n), &en, move |x| Elem::pair(id.clone(), x.snd().clone())),
        sg.sigma_n(n)?,
    ])?;
    Ok(fail_note(compare(&unit, &s.eta(n)?)?, "unit"))
}

pub type Forg<'a> = LiftFunctor<'a, Sigma>;

/// The forgetful functor from T-algebras to E-objects.
pub fn forg<'a>(sg: &'a Sigma, src: &'a Em<SetSkew>, tgt: &'a Em<SetSkew>) -> Forg<'a> {
    LiftFunctor {
        name: "Forg".into(),
        k: sg,
        src,
        tgt,
    }
}

/// `λ_{M,N}` coequalizes `μ̇_{M,TN}, M•λ_{R,N} : M•(R•TN) ⇉ M•TN` and is
/// universal: onto, with the kernel of the canonical coequalizer.
pub fn lambda_is_coequalizer(sg: &Sigma, m: &Obj, n: &Obj) -> Result<bool> {
    let (s, d) = (&sg.s, &sg.dot);
    let r = s.unit();
    let tn = s.t(n)?;
    let lam = sg.lambda(m, n)?;
    let f = d.mu2(m, &tn)?;
    let g = d.whisker_right(m, &sg.lambda(&r, n)?, &d.t(&tn)?, &tn)?;
    let g = g.retype(f.dom(), f.cod());
    let c = Coeq::of(&f, &g, "lam")?;
    if !chain(&[f, lam.clone()])?.equals(&chain(&[g, lam.clone()])?)? {
        return Ok(false);
    }
    Ok(lam.is_surjective()? && same_kernel(&lam, &c.proj)?.is_none())
}

/// σ as a skew monoidal functor, the monad-morphism laws, `Forg` and its
/// strength, the identity `μ_{M,N}∘σ_{M,TN} = λ_{M,N}`, and the
/// biconditional between `λ` being a coequalizer and `Forg_{M,FN}` being
/// invertible.
pub fn forg_checks<'a>(sg: &'a Sigma, f: &'a Forg<'a>, uni: &'a EmUniverse<Obj>) -> Vec<Check<'a>> {
    let mut out = functor_checks("forg.Sigma", sg, &uni.base);
    let cases: Vec<String> = uni.base.iter().map(|o| o.name().to_string()).collect();
    out.push(Check::new("forg.sigma-monad-morphism", cases, move |i| {
        Outcome::from_result(sigma_monad_morphism(sg, &uni.base[i]))
    }));
    let cases: Vec<String> = uni.algs.iter().map(|a| f.src.label(a)).collect();
    out.push(Check::new("forg.E-object", cases.clone(), move |i| {
        Outcome::from_result((|| {
            let fa = f.obj(&uni.algs[i])?;
            algebra_laws(&sg.dot, fa.alg().expect("algebra"))
        })())
    }));
    out.push(Check::new("forg.strict", cases, move |i| {
        Outcome::from_result((|| {
            let a = &uni.algs[i];
            let fa = f.obj(a)?;
            let same = fa.under().same(a.under());
            Ok(Outcome::when(same, || Witness::new(f.src.label(a), fa.under(), a.under()).with_note("carriers differ")))
        })())
    }));
    out.extend(functor_checks("forg.Forg", f, &uni.algs));

    let pairs = tuples(uni.base.len(), 2);
    let pcases: Vec<String> = pairs.iter().map(|p| format!("{},{}", uni.base[p[0]].name(), uni.base[p[1]].name())).collect();
    let p1 = pairs.clone();
    out.push(Check::new("forg.lambda-mu-sigma", pcases.clone(), move |i| {
        let (m, n) = (&uni.base[p1[i][0]], &uni.base[p1[i][1]]);
        equation(|| {
            let s = &sg.s;
            let tn = s.t(n)?;
            let l = chain(&[sg.sigma(m, &tn)?, s.mu2(m, n)?])?;
            Ok((l, sg.lambda(m, n)?))
        })
    }));
    out.push(Check::new("forg.strong-iff", pcases, move |i| {
        let (m, n) = (&uni.base[pairs[i][0]], &uni.base[pairs[i][1]]);
        Outcome::from_result((|| {
            let a = lambda_is_coequalizer(sg, m, n)?;
            let fnn = EmObj::Alg(crate::modcat::free_algebra(&sg.s, n)?);
            let b = classify(&f.f2(&EmObj::Plain(m.clone()), &fnn)?)?.0 == Class::Iso;
            Ok(Outcome::when(a == b, || {
                Witness::new("-", format!("λ coequalizer: {a}"), format!("Forg strength iso: {b}"))
            }))
        })())
    }));
    out
}

//! E-objects under a set structure `⊛`: the actions `ρ`, `λ₁`, `λ₂` on
//! `M⊛N`, the quotient tensor `M⊛_qN` coequalizing `ρ` against `λ₂`, its
//! algebras for `T_q = R̄⊛_q-`, the comparison `φ̄` with T-algebras, and
//! lifts of skew monoidal functors to algebras in general.

use crate::backends::coeq::{factor_through, Coeq};
use crate::backends::finset::{compose_fun, hom_set, id_fun, Elem, Mor, Obj};
use crate::cat::{compare, Check, Outcome, Witness};
use crate::error::{Error, Result};
use crate::modcat::{algebra_laws, algebras, is_algebra_map, Em, EmObj, EmUniverse, LiftFunctor, Lifted, QuotientTensor, EMQuot, TAlg};
use crate::mutate::mutate;
use crate::skewmon::set::v_copower;
use crate::skewmon::{chain, functor_checks, smc_checks, tuples, Base, SetSkew, SkewFunctor, SkewOps};
use crate::underlying::{Forg, Sigma};

/// An object with an action `E⊗M -> M` of `E = End(R)`.
pub type EObj = TAlg<Obj>;

fn fail_note(o: Outcome, note: &str) -> Outcome {
    match o {
        Outcome::Fail(w) => Outcome::Fail(w.with_note(note)),
        o => o,
    }
}

/// Run equations in order and stop at the first that does not pass.
fn all_of(parts: Vec<(&str, Result<Outcome>)>) -> Result<Outcome> {
    for (what, o) in parts {
        let o = o?;
        if !matches!(o, Outcome::Pass) {
            return Ok(fail_note(o, what));
        }
    }
    Ok(Outcome::Pass)
}

fn ex(s: &SetSkew, x: &Obj) -> Obj {
    Obj::product(&s.endo(), x)
}

/// `E⊗h`.
fn e_on(s: &SetSkew, h: &Mor) -> Mor {
    v_copower(&s.endo(), h)
}

/// `σ_N : E⊗N -> R⊛N`.
pub fn sigma_e(s: &SetSkew, n: &Obj) -> Result<Mor> {
    let m = Sigma::new(s).sigma_n(n)?;
    Ok(m.retype(&ex(s, n), m.cod()))
}

/// `ρ_{M,N} = μ_{M,N}∘(M⊛σ_N)∘Γ'_{E,M,N}`, a right action of `E`.
pub fn rho(s: &SetSkew, m: &Obj, n: &Obj) -> Result<Mor> {
    let e = s.endo();
    chain(&[
        s.strength_prime(&e, m, n)?,
        s.whisker_right(m, &sigma_e(s, n)?, &ex(s, n), &s.t(n)?)?,
        s.mu2(m, n)?,
    ])?
    .tabulate()
}

/// `λ₁ = (λ_M⊛N)∘Γ_{E,M,N}`.
pub fn lambda1(s: &SetSkew, a: &EObj, n: &Obj) -> Result<Mor> {
    let e = s.endo();
    chain(&[s.strength(&e, &a.obj, n)?, s.whisker_left(&a.act, &ex(s, &a.obj), &a.obj, n)?])?.tabulate()
}

/// `λ₂ = (M⊛λ_N)∘Γ'_{E,M,N}`.
pub fn lambda2(s: &SetSkew, m: &Obj, b: &EObj) -> Result<Mor> {
    let e = s.endo();
    let l = chain(&[s.strength_prime(&e, m, &b.obj)?, s.whisker_right(m, &b.act, &ex(s, &b.obj), &b.obj)?])?;
    mutate(&s.muts, "lambda2", &[m.name().to_string(), b.name.clone()], l.tabulate()?)
}

/// `R` with `E` acting by evaluation.
pub fn unit_eobj(s: &SetSkew) -> EObj {
    let r = s.unit();
    TAlg {
        name: "R_E".into(),
        act: s.ev(&r).retype(&ex(s, &r), &r),
        obj: r,
    }
}

/// `V⊗N` with `E` acting on the second factor.
pub fn copower_eobj(s: &SetSkew, v: &Obj, b: &EObj) -> EObj {
    let obj = Obj::product(v, &b.obj);
    let act = b.act.clone();
    TAlg {
        name: format!("({}x{})", v.name(), b.name),
        act: Mor::new(&ex(s, &obj), &obj, move |x| {
            let (e, vn) = (x.fst(), x.snd());
            Elem::pair(vn.fst().clone(), act.apply(&Elem::pair(e.clone(), vn.snd().clone())))
        }),
        obj,
    }
}

/// `E` acting on itself by composition: the free E-object on a point.
pub fn free_e(s: &SetSkew, m: &Obj) -> EObj {
    let r = s.unit();
    let obj = ex(s, m);
    TAlg {
        name: format!("E{}", m.name()),
        act: Mor::new(&ex(s, &obj), &obj, move |x| {
            let (e, fm) = (x.fst(), x.snd());
            Elem::pair(compose_fun(&r, e, fm.fst()), fm.snd().clone())
        }),
        obj,
    }
}

/// Unit and associativity of an action on `x`; with `op` the
/// associativity is that of `E^op`.
pub fn action_laws(s: &SetSkew, act: &Mor, x: &Obj, op: bool) -> Result<Outcome> {
    let r = s.unit();
    let es = s.endo().elems()?;
    let id = id_fun(&r)?;
    for p in x.elems()?.iter() {
        let y = act.apply(&Elem::pair(id.clone(), p.clone()));
        if y != *p {
            return Ok(Outcome::Fail(Witness::new(p, y, p).with_note("unit law")));
        }
        for e in es.iter() {
            for f in es.iter() {
                let l = act.apply(&Elem::pair(e.clone(), act.apply(&Elem::pair(f.clone(), p.clone()))));
                let ef = if op { compose_fun(&r, f, e) } else { compose_fun(&r, e, f) };
                let rr = act.apply(&Elem::pair(ef, p.clone()));
                if l != rr {
                    return Ok(Outcome::Fail(Witness::new(format!("({e},{f},{p})"), l, rr).with_note("associativity law")));
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

/// `κ(u, λ(v, x)) = λ(v, κ(u, x))`.
pub fn commute(s: &SetSkew, k: &Mor, l: &Mor, x: &Obj) -> Result<Outcome> {
    let es = s.endo().elems()?;
    for p in x.elems()?.iter() {
        for u in es.iter() {
            for v in es.iter() {
                let a = k.apply(&Elem::pair(u.clone(), l.apply(&Elem::pair(v.clone(), p.clone()))));
                let b = l.apply(&Elem::pair(v.clone(), k.apply(&Elem::pair(u.clone(), p.clone()))));
                if a != b {
                    return Ok(Outcome::Fail(Witness::new(format!("({u},{v},{p})"), a, b).with_note("actions do not commute")));
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

/// Every E-object structure on `m`.
pub fn e_objects(s: &SetSkew, m: &Obj) -> Result<Vec<EObj>> {
    let mut out = Vec::new();
    for f in hom_set(&ex(s, m), m)? {
        if matches!(action_laws(s, &f, m, false)?, Outcome::Pass) {
            out.push(TAlg {
                name: format!("{}.e{}", m.name(), out.len()),
                obj: m.clone(),
                act: f,
            });
        }
    }
    Ok(out)
}

/// `f∘λ_A = λ_B∘(E⊗f)`.
pub fn is_e_map(s: &SetSkew, f: &Mor, a: &EObj, b: &EObj) -> Result<bool> {
    let l = chain(&[a.act.clone(), f.clone()])?;
    let r = chain(&[e_on(s, f).retype(&ex(s, &a.obj), &ex(s, &b.obj)), b.act.clone()])?;
    l.equals(&r)
}

/// The quotient tensor of E-objects over a set structure.
pub struct QQuot {
    pub s: SetSkew,
}

impl QuotientTensor for QQuot {
    type B = SetSkew;
    type O = EObj;

    fn name(&self) -> String {
        format!("smpq[{}]", self.s.name())
    }

    fn base(&self) -> &SetSkew {
        &self.s
    }

    fn under(&self, a: &EObj) -> Obj {
        a.obj.clone()
    }

    fn label(&self, a: &EObj) -> String {
        a.name.clone()
    }

    fn unit(&self) -> EObj {
        unit_eobj(&self.s)
    }

    fn tensor(&self, a: &EObj, b: &EObj) -> Result<(EObj, Coeq)> {
        let s = &self.s;
        let (m, n) = (&a.obj, &b.obj);
        let name = format!("({}%{})", a.name, b.name);
        let mut c = Coeq::of(&rho(s, m, n)?, &lambda2(s, m, b)?, name.clone())?;
        c.proj = mutate(&s.muts, "q", &[a.name.clone(), b.name.clone()], c.proj)?;
        let h = chain(&[lambda1(s, a, n)?, c.proj.clone()])?;
        let act = factor_through(&e_on(s, &c.proj), &h)?;
        let obj = c.obj.clone();
        Ok((TAlg { name, act: act.retype(&ex(s, &obj), &obj), obj }, c))
    }

    fn is_morphism(&self, f: &Mor, a: &EObj, b: &EObj) -> Result<bool> {
        is_e_map(&self.s, f, a, b)
    }
}

pub type QSkew = Lifted<QQuot>;

impl Base for QSkew {
    fn coequalize(&self, f: &Mor, g: &Mor, tgt: &EObj, name: String) -> Result<(EObj, Coeq)> {
        let s = &self.q.s;
        if !f.cod().same(&tgt.obj) {
            return Err(Error::input(format!("pair does not land in {}", tgt.name)));
        }
        let c = Coeq::of(f, g, name.clone())?;
        let act = factor_through(&e_on(s, &c.proj), &chain(&[tgt.act.clone(), c.proj.clone()])?)?;
        let obj = c.obj.clone();
        Ok((TAlg { name, act: act.retype(&ex(s, &obj), &obj), obj }, c))
    }
}

/// `φ : _EM -> M`, forgetting the action, with `φ₂ = q` and `φ₀ = 1`.
pub struct Phi<'a> {
    pub q: &'a QSkew,
}

impl SkewFunctor for Phi<'_> {
    type S = QSkew;
    type T = SetSkew;

    fn name(&self) -> String {
        "phi".into()
    }

    fn src(&self) -> &QSkew {
        self.q
    }

    fn tgt(&self) -> &SetSkew {
        &self.q.q.s
    }

    fn obj(&self, a: &EObj) -> Result<Obj> {
        Ok(a.obj.clone())
    }

    fn fmap(&self, f: &Mor, _a: &EObj, _b: &EObj) -> Result<Mor> {
        Ok(f.clone())
    }

    fn f2(&self, a: &EObj, b: &EObj) -> Result<Mor> {
        self.q.proj(a, b)
    }

    fn f0(&self) -> Result<Mor> {
        Ok(Mor::id(&self.q.q.s.unit()))
    }
}

/// The identity skew monoidal functor.
pub struct IdFunctor {
    pub s: SetSkew,
}

impl SkewFunctor for IdFunctor {
    type S = SetSkew;
    type T = SetSkew;

    fn name(&self) -> String {
        "Id".into()
    }

    fn src(&self) -> &SetSkew {
        &self.s
    }

    fn tgt(&self) -> &SetSkew {
        &self.s
    }

    fn obj(&self, a: &Obj) -> Result<Obj> {
        Ok(a.clone())
    }

    fn fmap(&self, f: &Mor, _a: &Obj, _b: &Obj) -> Result<Mor> {
        Ok(f.clone())
    }

    fn f2(&self, a: &Obj, b: &Obj) -> Result<Mor> {
        Ok(Mor::id(&self.s.tensor(a, b)?))
    }

    fn f0(&self) -> Result<Mor> {
        Ok(Mor::id(&self.s.unit()))
    }
}

/// `⊛_q` and the two algebra categories compared by `φ̄`.
pub struct Smpq {
    /// `(_EM)^{T_q}`; its base is `⊛_q`.
    pub em: Em<QSkew>,
    /// `M^T`.
    pub tem: Em<SetSkew>,
}

impl Smpq {
    pub fn new(s: &SetSkew) -> Smpq {
        Smpq {
            em: Lifted::new(EMQuot::new(Lifted::new(QQuot { s: s.clone() }))),
            tem: Lifted::new(EMQuot::new(s.clone()).with_mutations(s.muts.clone())),
        }
    }

    pub fn q(&self) -> &QSkew {
        self.em.base()
    }

    pub fn s(&self) -> &SetSkew {
        &self.q().q.s
    }

    pub fn phi(&self) -> Phi<'_> {
        Phi { q: self.q() }
    }
}

/// The objects the appendix checks run over.
pub struct QUniverse {
    pub base: Vec<Obj>,
    /// Small sets used as copower weights.
    pub weights: Vec<Obj>,
    pub eobjs: Vec<EObj>,
    /// E-objects as plain objects, and their `T_q`-algebras.
    pub qalgs: EmUniverse<EObj>,
    /// T-algebras on the same carriers.
    pub talgs: Vec<TAlg<Obj>>,
}

impl QUniverse {
    pub fn new(sm: &Smpq, carriers: &[Obj]) -> Result<QUniverse> {
        let s = sm.s();
        let mut eobjs = Vec::new();
        let mut talgs = Vec::new();
        for m in carriers {
            eobjs.extend(e_objects(s, m)?);
            talgs.extend(algebras(s, m)?);
        }
        let mut qa = Vec::new();
        for x in &eobjs {
            qa.extend(algebras(sm.q(), x)?);
        }
        let weights = carriers.iter().filter(|c| c.size() <= 2).cloned().collect();
        Ok(QUniverse {
            base: carriers.to_vec(),
            weights,
            qalgs: EmUniverse::new(eobjs.clone(), qa),
            eobjs,
            talgs,
        })
    }
}

/// `Γ'^q_{V,M,N} : V⊗(M⊛_qN) -> M⊛_q(V⊗N)` or, without `prime`,
/// `Γ^q_{V,M,N} : V⊗(M⊛_qN) -> (V⊗M)⊛_qN`, each by factoring through `V⊗q`.
pub fn strength_q(q: &QSkew, v: &Obj, a: &EObj, b: &EObj, prime: bool) -> Result<Mor> {
    let s = &q.q.s;
    let (m, n) = (&a.obj, &b.obj);
    let h = if prime {
        chain(&[s.strength_prime(v, m, n)?, q.proj(a, &copower_eobj(s, v, b))?])?
    } else {
        chain(&[s.strength(v, m, n)?, q.proj(&copower_eobj(s, v, a), b)?])?
    };
    let vq = v_copower(v, &q.proj(a, b)?);
    factor_through(&vq, &h)
}

fn bijective(m: &Mor) -> Result<Outcome> {
    if let Some((x, y, z)) = m.collision()? {
        return Ok(Outcome::Fail(Witness::new(format!("{x} ~ {y}"), &z, &z).with_note("not injective")));
    }
    Ok(match m.missed()? {
        Some(y) => Outcome::Fail(Witness::new(y, "-", "-").with_note("not surjective")),
        None => Outcome::Pass,
    })
}

/// The actions on `M⊛N`: `ρ` is a right action, `λ₁`, `λ₂` are actions,
/// and all three commute pairwise; `q` coequalizes `ρ, λ₂` with common
/// section `(1,-)`.
pub fn pair_actions(s: &SetSkew, a: &EObj, b: &EObj) -> Result<Outcome> {
    let (m, n) = (&a.obj, &b.obj);
    let mn = s.tensor(m, n)?;
    let (r, l1, l2) = (rho(s, m, n)?, lambda1(s, a, n)?, lambda2(s, m, b)?);
    all_of(vec![
        ("ρ", action_laws(s, &r, &mn, true)),
        ("λ₁", action_laws(s, &l1, &mn, false)),
        ("λ₂", action_laws(s, &l2, &mn, false)),
        ("λ₁ and ρ", commute(s, &l1, &r, &mn)),
        ("λ₂ and ρ", commute(s, &l2, &r, &mn)),
        ("λ₁ and λ₂", commute(s, &l1, &l2, &mn)),
    ])
}

/// `q` coequalizes `ρ, λ₂` and both have the section `x ↦ (1,x)`.
pub fn q_check(q: &QSkew, a: &EObj, b: &EObj) -> Result<Outcome> {
    let s = &q.q.s;
    let (m, n) = (&a.obj, &b.obj);
    let mn = s.tensor(m, n)?;
    let (r, l2) = (rho(s, m, n)?, lambda2(s, m, b)?);
    let p = q.proj(a, b)?;
    let id = id_fun(&s.unit())?;
    let sec = Mor::new(&mn, &ex(s, &mn), move |x| Elem::pair(id.clone(), x.clone()));
    let one = Mor::id(&mn);
    all_of(vec![
        ("q∘ρ = q∘λ₂", compare(&chain(&[r.clone(), p.clone()])?, &chain(&[l2.clone(), p])?)),
        ("ρ∘s = 1", compare(&chain(&[sec.clone(), r])?, &one)),
        ("λ₂∘s = 1", compare(&chain(&[sec, l2])?, &one)),
    ])
}

/// The actions on `L⊛(M⊛N)` and `(L⊛M)⊛N`, valid and intertwined by `γ`.
pub fn triple_actions(s: &SetSkew, l: &EObj, m: &EObj, n: &EObj) -> Result<Outcome> {
    let e = s.endo();
    let (lo, mo, no) = (&l.obj, &m.obj, &n.obj);
    let mn = s.tensor(mo, no)?;
    let lm = s.tensor(lo, mo)?;
    let l_mn = s.tensor(lo, &mn)?;
    let lm_n = s.tensor(&lm, no)?;
    let gp = s.strength_prime(&e, lo, &mn)?;
    let gl = s.strength(&e, &lm, no)?;
    let rho1 = rho(s, lo, &mn)?;
    let rho2 = chain(&[gp.clone(), s.whisker_right(lo, &rho(s, mo, no)?, &ex(s, &mn), &mn)?])?.tabulate()?;
    let rho1p = chain(&[gl.clone(), s.whisker_left(&rho(s, lo, mo)?, &ex(s, &lm), &lm, no)?])?.tabulate()?;
    let rho2p = rho(s, &lm, no)?;
    let lam1 = lambda1(s, l, &mn)?;
    let lam2 = chain(&[gp.clone(), s.whisker_right(lo, &lambda1(s, m, no)?, &ex(s, &mn), &mn)?])?.tabulate()?;
    let lam3 = chain(&[gp, s.whisker_right(lo, &lambda2(s, mo, n)?, &ex(s, &mn), &mn)?])?.tabulate()?;
    let lam1p = chain(&[gl.clone(), s.whisker_left(&lambda1(s, l, mo)?, &ex(s, &lm), &lm, no)?])?.tabulate()?;
    let lam2p = chain(&[gl, s.whisker_left(&lambda2(s, lo, m)?, &ex(s, &lm), &lm, no)?])?.tabulate()?;
    let lam3p = lambda2(s, &lm, n)?;
    let g = s.gamma(lo, mo, no)?.tabulate()?;
    let eg = e_on(s, &g).retype(&ex(s, &l_mn), &ex(s, &lm_n));
    let inter = |x: &Mor, y: &Mor| compare(&chain(&[x.clone(), g.clone()])?, &chain(&[eg.clone(), y.clone()])?);
    all_of(vec![
        ("ρ₁", action_laws(s, &rho1, &l_mn, true)),
        ("ρ₂", action_laws(s, &rho2, &l_mn, true)),
        ("ρ'₁", action_laws(s, &rho1p, &lm_n, true)),
        ("ρ'₂", action_laws(s, &rho2p, &lm_n, true)),
        ("λ₁", action_laws(s, &lam1, &l_mn, false)),
        ("λ₂", action_laws(s, &lam2, &l_mn, false)),
        ("λ₃", action_laws(s, &lam3, &l_mn, false)),
        ("λ'₁", action_laws(s, &lam1p, &lm_n, false)),
        ("λ'₂", action_laws(s, &lam2p, &lm_n, false)),
        ("λ'₃", action_laws(s, &lam3p, &lm_n, false)),
        ("γ∘ρ₁ = ρ'₁∘(E⊗γ)", inter(&rho1, &rho1p)),
        ("γ∘ρ₂ = ρ'₂∘(E⊗γ)", inter(&rho2, &rho2p)),
        ("γ∘λ₁ = λ'₁∘(E⊗γ)", inter(&lam1, &lam1p)),
        ("γ∘λ₂ = λ'₂∘(E⊗γ)", inter(&lam2, &lam2p)),
        ("γ∘λ₃ = λ'₃∘(E⊗γ)", inter(&lam3, &lam3p)),
    ])
}

/// The unit and counit relations at an E-object, with `R` acted on by
/// evaluation.
pub fn unit_relations(s: &SetSkew, a: &EObj) -> Result<Outcome> {
    let m = &a.obj;
    let r = s.unit();
    let re = unit_eobj(s);
    let (rm, mr) = (s.t(m)?, s.tensor(m, &r)?);
    let eta = s.eta(m)?;
    let eeta = e_on(s, &eta).retype(&ex(s, m), &ex(s, &rm));
    let eps = s.eps(m)?;
    let eeps = e_on(s, &eps).retype(&ex(s, &mr), &ex(s, m));
    all_of(vec![
        (
            "ρ∘(E⊗η) = λ₁∘(E⊗η)",
            compare(&chain(&[eeta.clone(), rho(s, &r, m)?])?, &chain(&[eeta.clone(), lambda1(s, &re, m)?])?),
        ),
        (
            "λ₂∘(E⊗η) = η∘λ",
            compare(&chain(&[eeta, lambda2(s, &r, a)?])?, &chain(&[a.act.clone(), eta])?),
        ),
        (
            "ε∘ρ = ε∘λ₂",
            compare(&chain(&[rho(s, m, &r)?, eps.clone()])?, &chain(&[lambda2(s, m, &re)?, eps.clone()])?),
        ),
        (
            "ε∘λ₁ = λ∘(E⊗ε)",
            compare(&chain(&[lambda1(s, a, &r)?, eps])?, &chain(&[eeps, a.act.clone()])?),
        ),
    ])
}

/// `μ_{M,N}∘μ_{M,TN} = μ_{M,N}∘(M⊛μ_N)` and `μ_{M,N}∘(M⊛η_N) = 1`.
pub fn mu_relations(s: &SetSkew, m: &Obj, n: &Obj) -> Result<Outcome> {
    let (tn, ttn) = (s.t(n)?, s.t(&s.t(n)?)?);
    let mu = s.mu2(m, n)?;
    all_of(vec![
        (
            "associativity",
            compare(
                &chain(&[s.mu2(m, &tn)?, mu.clone()])?,
                &chain(&[s.whisker_right(m, &s.mu(n)?, &ttn, &tn)?, mu.clone()])?,
            ),
        ),
        (
            "unit",
            compare(&chain(&[s.whisker_right(m, &s.eta(n)?, n, &tn)?, mu])?, &Mor::id(&s.tensor(m, n)?)),
        ),
    ])
}

// ---- the left adjoint of Forg ----

/// `Forg(M,α) = (M, α∘σ_M)`.
pub fn forg_e(s: &SetSkew, a: &TAlg<Obj>) -> Result<EObj> {
    let act = chain(&[sigma_e(s, &a.obj)?, a.act.clone()])?;
    Ok(TAlg {
        name: format!("Forg({})", a.name),
        obj: a.obj.clone(),
        act,
    })
}

/// `F(M,λ) = (R⊛_qM, ∇)` with `∇∘Tq = q∘μ_M`.
pub fn left_adjoint(q: &QSkew, x: &EObj) -> Result<TAlg<Obj>> {
    let s = &q.q.s;
    let r = s.unit();
    let re = q.unit();
    let t = q.tensor_data(&re, x)?;
    let tq = s.whisker_right(&r, &t.1.proj, &s.t(&x.obj)?, &t.0.obj)?;
    let nabla = factor_through(&tq, &chain(&[s.mu(&x.obj)?, t.1.proj.clone()])?)?;
    Ok(TAlg {
        name: format!("F({})", x.name),
        obj: t.0.obj.clone(),
        act: nabla.retype(&s.t(&t.0.obj)?, &t.0.obj),
    })
}

/// The unit `X -> Forg F X`, `q∘η_M`.
pub fn adj_unit(q: &QSkew, x: &EObj) -> Result<Mor> {
    chain(&[q.base().eta(&x.obj)?, q.proj(&q.unit(), x)?])
}

/// The counit `F Forg A -> A`, the factorization of `α` through `q`.
pub fn adj_counit(q: &QSkew, a: &TAlg<Obj>) -> Result<Mor> {
    let fa = forg_e(&q.q.s, a)?;
    q.tensor_data(&q.unit(), &fa)?.1.factor(&a.act)
}

/// `F` is well defined at `X`, the unit is an E-map and
/// `ε_{FX}∘F(η_X) = 1`.
pub fn adj_at_eobj(q: &QSkew, x: &EObj) -> Result<Outcome> {
    let s = &q.q.s;
    let fx = left_adjoint(q, x)?;
    let o = algebra_laws(s, &fx)?;
    if !matches!(o, Outcome::Pass) {
        return Ok(fail_note(o, "∇ is not an action"));
    }
    let ffx = forg_e(s, &fx)?;
    let u = adj_unit(q, x)?;
    if !is_e_map(s, &u, x, &ffx)? {
        return Ok(Outcome::Fail(Witness::new(&x.name, "-", "-").with_note("unit is not an E-map")));
    }
    let fu = q.whisker_right(&q.unit(), &u, x, &ffx)?;
    let c = adj_counit(q, &fx)?;
    Ok(fail_note(compare(&chain(&[fu, c])?, &Mor::id(&fx.obj))?, "ε_F∘Fη = 1"))
}

/// The counit is an algebra map and `Forg(ε_A)∘η_{Forg A} = 1`.
pub fn adj_at_alg(q: &QSkew, a: &TAlg<Obj>) -> Result<Outcome> {
    let s = &q.q.s;
    let fa = forg_e(s, a)?;
    let c = adj_counit(q, a)?;
    let o = is_algebra_map(s, &c, &left_adjoint(q, &fa)?, a)?;
    if !matches!(o, Outcome::Pass) {
        return Ok(fail_note(o, "counit"));
    }
    Ok(fail_note(compare(&chain(&[adj_unit(q, &fa)?, c])?, &Mor::id(&a.obj))?, "Forgε∘η_Forg = 1"))
}

/// `F(E⊗M) ≅ FM`: the map `(f,m) ↦ q(f,(1,m))` is a bijective algebra map.
pub fn free_comparison(q: &QSkew, m: &Obj) -> Result<Outcome> {
    let s = &q.q.s;
    let em = free_e(s, m);
    let fe = left_adjoint(q, &em)?;
    let fm = crate::modcat::free_algebra(s, m)?;
    let id = id_fun(&s.unit())?;
    let inc = Mor::new(m, &em.obj, move |x| Elem::pair(id.clone(), x.clone()));
    let k = chain(&[s.t_mor(&inc, m, &em.obj)?, q.proj(&q.unit(), &em)?])?;
    let o = bijective(&k)?;
    if !matches!(o, Outcome::Pass) {
        return Ok(o);
    }
    is_algebra_map(s, &k, &fm, &fe)
}

// ---- checks ----

fn names(xs: &[&EObj]) -> String {
    xs.iter().map(|x| x.name.as_str()).collect::<Vec<_>>().join(",")
}

/// The quotient tensor: action relations, `q`, the five axioms, the
/// coherences as E-maps, the strengths, `φ` as a skew monoidal functor,
/// agreement with `⊛` when `E` is trivial, and the left adjoint of Forg.
pub fn smpq_checks<'a>(sm: &'a Smpq, phi: &'a Phi<'a>, u: &'a QUniverse) -> Vec<Check<'a>> {
    let q = sm.q();
    let s = sm.s();
    let xs = &u.eobjs;
    let pairs = tuples(xs.len(), 2);
    let pcases: Vec<String> = pairs.iter().map(|p| names(&[&xs[p[0]], &xs[p[1]]])).collect();
    let triples = tuples(xs.len(), 3);
    let tcases: Vec<String> = triples.iter().map(|t| names(&[&xs[t[0]], &xs[t[1]], &xs[t[2]]])).collect();
    let singles: Vec<String> = xs.iter().map(|x| x.name.clone()).collect();
    let mut out = Vec::new();

    let (p1, p2, p3) = (pairs.clone(), pairs.clone(), pairs.clone());
    out.push(Check::new("smpq.pair-actions", pcases.clone(), move |i| {
        Outcome::from_result(pair_actions(s, &xs[p1[i][0]], &xs[p1[i][1]]))
    }));
    let t1 = triples.clone();
    out.push(Check::new("smpq.triple-actions", tcases.clone(), move |i| {
        Outcome::from_result(triple_actions(s, &xs[t1[i][0]], &xs[t1[i][1]], &xs[t1[i][2]]))
    }));
    out.push(Check::new("smpq.unit-relations", singles.clone(), move |i| {
        Outcome::from_result(unit_relations(s, &xs[i]))
    }));
    let bp = tuples(u.base.len(), 2);
    let bcases = bp.iter().map(|p| format!("{},{}", u.base[p[0]].name(), u.base[p[1]].name())).collect();
    out.push(Check::new("smpq.mu-relations", bcases, move |i| {
        Outcome::from_result(mu_relations(s, &u.base[bp[i][0]], &u.base[bp[i][1]]))
    }));
    out.push(Check::new("smpq.q", pcases.clone(), move |i| {
        Outcome::from_result(q_check(q, &xs[p2[i][0]], &xs[p2[i][1]]))
    }));

    out.extend(smc_checks("smpq", q, xs));

    out.push(Check::new("smpq.coherence-E-maps", tcases, move |i| {
        let t = &triples[i];
        let (a, b, c) = (&xs[t[0]], &xs[t[1]], &xs[t[2]]);
        Outcome::from_result((|| {
            let src = q.tensor(a, &q.tensor(b, c)?)?;
            let tgt = q.tensor(&q.tensor(a, b)?, c)?;
            let mut ok = vec![("γ", is_e_map(s, &q.gamma(a, b, c)?, &src, &tgt)?)];
            if t[1] == 0 && t[2] == 0 {
                let r = q.unit();
                ok.push(("η", is_e_map(s, &q.eta(a)?, a, &q.tensor(&r, a)?)?));
                ok.push(("ε", is_e_map(s, &q.eps(a)?, &q.tensor(a, &r)?, a)?));
            }
            Ok(match ok.iter().find(|(_, b)| !b) {
                Some((what, _)) => Outcome::Fail(Witness::new(names(&[a, b, c]), "-", "-").with_note(format!("{what} is not an E-map"))),
                None => Outcome::Pass,
            })
        })())
    }));

    let vt: Vec<(usize, usize, usize)> = (0..u.weights.len())
        .flat_map(|v| pairs.iter().map(move |p| (v, p[0], p[1])))
        .collect();
    let vcases: Vec<String> = vt.iter().map(|&(v, a, b)| format!("{},{}", u.weights[v].name(), names(&[&xs[a], &xs[b]]))).collect();
    let vt2 = vt.clone();
    out.push(Check::new("smpq.Gamma'-iso", vcases.clone(), move |i| {
        let (v, a, b) = vt[i];
        Outcome::from_result(strength_q(q, &u.weights[v], &xs[a], &xs[b], true).and_then(|g| bijective(&g)))
    }));
    out.push(Check::new("smpq.Gamma-defined", vcases, move |i| {
        let (v, a, b) = vt2[i];
        Outcome::from_result(strength_q(q, &u.weights[v], &xs[a], &xs[b], false).map(|_| Outcome::Pass))
    }));

    out.extend(functor_checks("smpq.phi", phi, xs));

    out.push(Check::new("smpq.trivial-E-collapse", pcases, move |i| {
        Outcome::from_result((|| {
            if s.endo().size() != 1 {
                return Ok(Outcome::Skip("E is not trivial".into()));
            }
            bijective(&q.proj(&xs[p3[i][0]], &xs[p3[i][1]])?)
        })())
    }));

    out.push(Check::new("smpq.F-on-E-objects", singles, move |i| Outcome::from_result(adj_at_eobj(q, &xs[i]))));
    let acases = u.talgs.iter().map(|a| a.name.clone()).collect();
    out.push(Check::new("smpq.F-on-algebras", acases, move |i| Outcome::from_result(adj_at_alg(q, &u.talgs[i]))));
    let bcases = u.base.iter().map(|m| m.name().to_string()).collect();
    out.push(Check::new("smpq.F-free", bcases, move |i| Outcome::from_result(free_comparison(q, &u.base[i]))));
    out
}

pub type BarPhi<'a> = LiftFunctor<'a, Phi<'a>>;

pub fn barphi<'a>(sm: &'a Smpq, phi: &'a Phi<'a>) -> BarPhi<'a> {
    LiftFunctor {
        name: "phibar".into(),
        k: phi,
        src: &sm.em,
        tgt: &sm.tem,
    }
}

fn image(bp: &BarPhi, x: &EmObj<EObj>) -> Result<TAlg<Obj>> {
    match bp.obj(x)? {
        EmObj::Alg(a) => Ok(a),
        EmObj::Plain(_) => Err(Error::input("expected an algebra")),
    }
}

/// Bijections `a -> b` that are algebra maps.
fn algebra_isos(s: &SetSkew, a: &TAlg<Obj>, b: &TAlg<Obj>) -> Result<Option<Mor>> {
    if a.obj.size() != b.obj.size() {
        return Ok(None);
    }
    for f in hom_set(&a.obj, &b.obj)? {
        if f.is_injective()? && matches!(is_algebra_map(s, &f, a, b)?, Outcome::Pass) {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// The inverse of `φ̄₂_{M,N}`: factor `π_{M,φ̄N}` through `q`, then
/// through `π^q`, and check both composites are identities.
pub fn barphi2_inverse(bp: &BarPhi, m: &EmObj<EObj>, n: &EmObj<EObj>) -> Result<Outcome> {
    let (pm, pn) = (bp.obj(m)?, bp.obj(n)?);
    let pi = bp.tgt.proj(&pm, &pn)?;
    let q = bp.src.base();
    let u = q.tensor_data(m.under(), n.under())?.1.factor(&pi)?;
    let v = bp.src.tensor_data(m, n)?.1.factor(&u)?;
    let f2 = bp.f2(m, n)?;
    all_of(vec![
        ("u∘φ̄₂ = 1", compare(&chain(&[f2.clone(), v.clone()])?, &Mor::id(f2.dom()))),
        ("φ̄₂∘u = 1", compare(&chain(&[v, f2.clone()])?, &Mor::id(f2.cod()))),
    ])
}

/// `φ̄` on the finite universes: its images are algebras, it is a skew
/// monoidal functor, full, faithful and essentially surjective, with
/// `φ̄₂` invertible and `φ̄₀ = 1`.
pub fn barphi_checks<'a>(bp: &'a BarPhi<'a>, u: &'a QUniverse) -> Vec<Check<'a>> {
    let s = bp.tgt.base();
    let q = bp.src.base();
    let algs = &u.qalgs.algs;
    let lab = |x: &EmObj<EObj>| bp.src.label(x);
    let singles: Vec<String> = algs.iter().map(lab).collect();
    let mut out = Vec::new();
    out.push(Check::new("barphi.images", singles, move |i| {
        Outcome::from_result(image(bp, &algs[i]).and_then(|a| algebra_laws(s, &a)))
    }));
    out.extend(functor_checks("barphi.functor", bp, algs));

    let pairs = tuples(algs.len(), 2);
    let pcases: Vec<String> = pairs.iter().map(|p| format!("{},{}", lab(&algs[p[0]]), lab(&algs[p[1]]))).collect();
    out.push(Check::new("barphi.fully-faithful", pcases, move |i| {
        let (x, y) = (&algs[pairs[i][0]], &algs[pairs[i][1]]);
        Outcome::from_result((|| {
            let (px, py) = (image(bp, x)?, image(bp, y)?);
            let src: Vec<Vec<Elem>> = bp.src.hom(x, y)?.iter().map(|f| f.table()).collect::<Result<_>>()?;
            for f in hom_set(&px.obj, &py.obj)? {
                let here = matches!(is_algebra_map(s, &f, &px, &py)?, Outcome::Pass);
                let there = src.contains(&f.table()?);
                if here != there {
                    return Ok(Outcome::Fail(
                        Witness::new(format!("{f:?}"), format!("T-algebra map: {here}"), format!("T_q-algebra map: {there}"))
                            .with_note("hom sets differ"),
                    ));
                }
            }
            Ok(Outcome::Pass)
        })())
    }));

    let tcases = u.talgs.iter().map(|a| a.name.clone()).collect();
    out.push(Check::new("barphi.essentially-surjective", tcases, move |i| {
        let a = &u.talgs[i];
        Outcome::from_result((|| {
            for x in algs {
                let px = image(bp, x)?;
                if algebra_isos(s, &px, a)?.is_some() {
                    return Ok(Outcome::Pass);
                }
            }
            Ok(Outcome::Fail(Witness::new(&a.name, "-", "-").with_note("no preimage up to isomorphism")))
        })())
    }));

    let all = u.qalgs.all();
    let np = (0..all.len()).flat_map(|m| (0..algs.len()).map(move |n| (m, n))).collect::<Vec<_>>();
    let ncases = np.iter().map(|&(m, n)| format!("{},{}", lab(&all[m]), lab(&algs[n]))).collect();
    out.push(Check::new("barphi.phi2-invertible", ncases, move |i| {
        let (m, n) = np[i];
        Outcome::from_result(barphi2_inverse(bp, &u.qalgs.all()[m], &algs[n]))
    }));
    out.push(Check::single("barphi.phi0-identity", "R", move || {
        Outcome::from_result((|| compare(&bp.f0()?, &Mor::id(&q.base().unit())))())
    }));
    out
}

/// `K̄₂` recomputed against quotients whose elements are the classes
/// themselves, conjugated back by the canonical iso.
pub fn lift_uniqueness<K>(kb: &LiftFunctor<K>, a: &EmObj<<K::S as SkewOps>::O>, b: &EmObj<<K::S as SkewOps>::O>) -> Result<Outcome>
where
    K: SkewFunctor,
    K::S: Base,
    K::T: Base,
{
    let (ka, kbb) = (kb.obj(a)?, kb.obj(b)?);
    let ab = kb.src.tensor_data(a, b)?;
    let k = kb.k;
    let h = chain(&[
        k.f2(a.under(), b.under())?,
        k.fmap(&ab.1.proj, &k.src().tensor(a.under(), b.under())?, ab.0.under())?,
    ])?;
    let c = kb.tgt.tensor_data(&ka, &kbb)?;
    let proj = c.1.proj.clone();
    let mut classes: std::collections::BTreeMap<Elem, Vec<Elem>> = std::collections::BTreeMap::new();
    for x in proj.dom().elems()?.iter() {
        classes.entry(proj.apply(x)).or_default().push(x.clone());
    }
    let class_of: std::collections::HashMap<Elem, Elem> =
        classes.iter().map(|(rep, xs)| (rep.clone(), Elem::fun(xs.clone()))).collect();
    let alt = Obj::explicit("classes", class_of.values().cloned().collect())?;
    let co = class_of.clone();
    let p2 = proj.clone();
    let alt_proj = Mor::new(proj.dom(), &alt, move |x| co[&p2.apply(x)].clone());
    let iota = Mor::new(&c.1.obj, &alt, move |y| class_of[y].clone());
    let k2alt = factor_through(&alt_proj, &h)?;
    compare(&chain(&[iota, k2alt])?, &kb.f2(a, b)?)
}

/// Lifts: the identity lifts to the identity, the lift of `Σ` is Forg with
/// action `α∘σ_M`, `G'K̄ = KG` for `Σ` and `φ`, and `K̄₂` does not depend on
/// the choice of quotient representatives.
pub fn lift_checks<'a>(
    idl: &'a LiftFunctor<'a, IdFunctor>,
    forg: &'a Forg<'a>,
    bp: &'a BarPhi<'a>,
    u: &'a EmUniverse<Obj>,
    qu: &'a QUniverse,
) -> Vec<Check<'a>> {
    let singles: Vec<String> = u.algs.iter().map(|a| idl.src.label(a)).collect();
    let pairs = tuples(u.algs.len(), 2);
    let pcases: Vec<String> = pairs.iter().map(|p| format!("{},{}", idl.src.label(&u.algs[p[0]]), idl.src.label(&u.algs[p[1]]))).collect();
    let mut out = Vec::new();
    let p1 = pairs.clone();
    out.push(Check::new("lift.identity", pcases.clone(), move |i| {
        let (a, b) = (&u.algs[p1[i][0]], &u.algs[p1[i][1]]);
        Outcome::from_result((|| {
            let ka = idl.obj(a)?;
            let o = compare(&ka.alg().expect("algebra").act, &a.alg().expect("algebra").act)?;
            if !matches!(o, Outcome::Pass) {
                return Ok(fail_note(o, "action changed"));
            }
            let f2 = idl.f2(a, b)?;
            Ok(fail_note(compare(&f2, &Mor::id(f2.dom()))?, "K̄₂ is not the identity"))
        })())
    }));
    out.push(Check::new("lift.sigma-is-forg", singles.clone(), move |i| {
        let a = &u.algs[i];
        Outcome::from_result((|| {
            let at = a.alg().expect("algebra");
            let fa = forg.obj(a)?;
            let direct = forg_e(&forg.k.s, at)?;
            let o = compare(&fa.alg().expect("algebra").act.retype(direct.act.dom(), direct.act.cod()), &direct.act)?;
            if !matches!(o, Outcome::Pass) {
                return Ok(fail_note(o, "action differs from α∘σ"));
            }
            Ok(Outcome::when(fa.under().same(a.under()), || Witness::new(&at.name, fa.under(), a.under()).with_note("G'K̄ ≠ KG")))
        })())
    }));
    let qsingles: Vec<String> = qu.qalgs.algs.iter().map(|a| bp.src.label(a)).collect();
    out.push(Check::new("lift.phi-square", qsingles, move |i| {
        let a = &qu.qalgs.algs[i];
        Outcome::from_result((|| {
            let pa = bp.obj(a)?;
            let want = bp.k.obj(a.under())?;
            Ok(Outcome::when(pa.under().same(&want), || Witness::new(bp.src.label(a), pa.under(), &want).with_note("G'K̄ ≠ KG")))
        })())
    }));
    out.push(Check::new("lift.uniqueness", pcases, move |i| {
        let (a, b) = (&u.algs[pairs[i][0]], &u.algs[pairs[i][1]]);
        Outcome::from_result(lift_uniqueness(forg, a, b))
    }));
    out.extend(functor_checks("lift.Id", idl, &u.algs));
    out
}

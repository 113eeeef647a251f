//! Algebras for the monad `T = R⊛-` and the horizontal tensor
//! `N ⊛̂ B`, the coequalizer of `μ_{N,M}, N⊛β : N⊛TM ⇉ N⊛M`.

pub mod lifted;
pub mod smp2;

use crate::backends::coeq::{check_split_fork, factor_through, same_kernel, Coeq};
use crate::backends::finset::Mor;
use crate::cat::{compare, Check, Outcome, Witness};
use crate::error::{Error, Result};
use crate::mutate::{mutate, Mutation};
use crate::skewmon::{chain, smc_checks, actegory_checks, tuples, Base, SkewFunctor, SkewOps};

pub use lifted::{Lifted, QuotientTensor};
pub use smp2::Smp2;

/// A T-algebra `(M, α : TM -> M)`.
#[derive(Clone, Debug)]
pub struct TAlg<X> {
    pub name: String,
    pub obj: X,
    pub act: Mor,
}

/// Objects of the horizontal tensor's world: plain objects may only sit
/// in the left slot.
#[derive(Clone, Debug)]
pub enum EmObj<X> {
    Plain(X),
    Alg(TAlg<X>),
}

impl<X> EmObj<X> {
    pub fn under(&self) -> &X {
        match self {
            EmObj::Plain(x) => x,
            EmObj::Alg(a) => &a.obj,
        }
    }

    pub fn alg(&self) -> Option<&TAlg<X>> {
        match self {
            EmObj::Alg(a) => Some(a),
            EmObj::Plain(_) => None,
        }
    }
}

fn fail_note(o: Outcome, note: &str) -> Outcome {
    match o {
        Outcome::Fail(w) => Outcome::Fail(w.with_note(note)),
        o => o,
    }
}

/// Unit and associativity laws of an algebra.
pub fn algebra_laws<S: SkewOps>(s: &S, a: &TAlg<S::O>) -> Result<Outcome> {
    let m = &a.obj;
    let tm = s.t(m)?;
    if !s.is_morphism(&a.act, &tm, m)? {
        return Ok(Outcome::Fail(Witness::new(&a.name, "-", "-").with_note("action is not a morphism")));
    }
    let unit = compare(&chain(&[s.eta(m)?, a.act.clone()])?, &Mor::id(&s.carrier(m)))?;
    if !matches!(unit, Outcome::Pass) {
        return Ok(fail_note(unit, "unit law"));
    }
    let l = chain(&[s.mu(m)?, a.act.clone()])?;
    let r = chain(&[s.t_mor(&a.act, &tm, m)?, a.act.clone()])?;
    Ok(fail_note(compare(&l, &r)?, "associativity law"))
}

/// `f∘α = β∘Tf`.
pub fn is_algebra_map<S: SkewOps>(s: &S, f: &Mor, a: &TAlg<S::O>, b: &TAlg<S::O>) -> Result<Outcome> {
    let l = chain(&[a.act.clone(), f.clone()])?;
    let r = chain(&[s.t_mor(f, &a.obj, &b.obj)?, b.act.clone()])?;
    Ok(fail_note(compare(&l, &r)?, "not an algebra morphism"))
}

/// Every algebra structure on `m`, by exhausting `Hom(TM, M)`.
pub fn algebras<S: SkewOps>(s: &S, m: &S::O) -> Result<Vec<TAlg<S::O>>> {
    let tm = s.t(m)?;
    let mut out = Vec::new();
    for f in s.hom(&tm, m)? {
        let a = TAlg {
            name: format!("{}.a{}", s.label(m), out.len()),
            obj: m.clone(),
            act: f,
        };
        if matches!(algebra_laws(s, &a)?, Outcome::Pass) {
            out.push(a);
        }
    }
    Ok(out)
}

/// `FM = (TM, μ_M)`.
pub fn free_algebra<S: SkewOps>(s: &S, m: &S::O) -> Result<TAlg<S::O>> {
    Ok(TAlg {
        name: format!("F{}", s.label(m)),
        obj: s.t(m)?,
        act: s.mu(m)?,
    })
}

/// `R̄ = (R, ε_R)`.
pub fn unit_algebra<S: SkewOps>(s: &S) -> Result<TAlg<S::O>> {
    let r = s.unit();
    Ok(TAlg {
        name: "R^".into(),
        obj: r.clone(),
        act: s.eps(&r)?,
    })
}

/// `A▹N = (M⊛N, (α⊛N)∘γ_{R,M,N})`.
pub fn act_right<S: SkewOps>(s: &S, a: &TAlg<S::O>, n: &S::O) -> Result<TAlg<S::O>> {
    let r = s.unit();
    let m = &a.obj;
    let act = chain(&[s.gamma(&r, m, n)?, s.whisker_left(&a.act, &s.t(m)?, m, n)?])?;
    Ok(TAlg {
        name: format!("({}|>{})", a.name, s.label(n)),
        obj: s.tensor(m, n)?,
        act,
    })
}

/// Monad laws for `T` at each object.
pub fn monad_checks<'a, S: SkewOps>(prefix: &str, s: &'a S, objs: &'a [S::O]) -> Vec<Check<'a>> {
    let cases: Vec<String> = objs.iter().map(|o| s.label(o)).collect();
    vec![
        Check::new(format!("{prefix}.monad-assoc"), cases.clone(), move |i| {
            crate::cat::equation(|| {
                let m = &objs[i];
                let (tm, ttm) = (s.t(m)?, s.t(&s.t(m)?)?);
                let l = chain(&[s.t_mor(&s.mu(m)?, &ttm, &tm)?, s.mu(m)?])?;
                let r = chain(&[s.mu(&tm)?, s.mu(m)?])?;
                Ok((l, r))
            })
        }),
        Check::new(format!("{prefix}.monad-unit"), cases, move |i| {
            Outcome::from_result((|| {
                let m = &objs[i];
                let tm = s.t(m)?;
                let id = Mor::id(&s.carrier(&tm));
                let l = chain(&[s.eta(&tm)?, s.mu(m)?])?;
                let r = chain(&[s.t_mor(&s.eta(m)?, m, &tm)?, s.mu(m)?])?;
                let o = compare(&l, &id)?;
                if !matches!(o, Outcome::Pass) {
                    return Ok(fail_note(o, "μ∘ηT"));
                }
                Ok(fail_note(compare(&r, &id)?, "μ∘Tη"))
            })())
        }),
    ]
}

/// The structure whose lift gives the horizontal tensor.
pub struct EMQuot<B: Base> {
    pub base: B,
    pub muts: Vec<Mutation>,
}

impl<B: Base> EMQuot<B> {
    pub fn new(base: B) -> Self {
        EMQuot { base, muts: Vec::new() }
    }

    pub fn with_mutations(mut self, muts: Vec<Mutation>) -> Self {
        self.muts = muts;
        self
    }

    /// The pair `μ_{N,M}, N⊛β : N⊛TM ⇉ N⊛M`.
    pub fn pair(&self, n: &B::O, b: &TAlg<B::O>) -> Result<(Mor, Mor)> {
        let s = &self.base;
        let m = &b.obj;
        Ok((s.mu2(n, m)?, s.whisker_right(n, &b.act, &s.t(m)?, m)?))
    }

    /// The action on `A⊛̂B`: the factorization of
    /// `π∘(α⊛M)∘γ_{R,N,M}` through `R⊛π`.
    pub fn psi(&self, a: &TAlg<B::O>, b: &TAlg<B::O>, q: &B::O, pi: &Mor) -> Result<Mor> {
        let s = &self.base;
        let (n, m) = (&a.obj, &b.obj);
        let r = s.unit();
        let rpi = s.whisker_right(&r, pi, &s.tensor(n, m)?, q)?;
        let h = chain(&[s.gamma(&r, n, m)?, s.whisker_left(&a.act, &s.t(n)?, n, m)?, pi.clone()])?;
        let psi = factor_through(&rpi, &h)?;
        mutate(&self.muts, "psi", &[a.name.clone(), b.name.clone()], psi)
    }
}

impl<B: Base> QuotientTensor for EMQuot<B> {
    type B = B;
    type O = EmObj<B::O>;

    fn name(&self) -> String {
        format!("em[{}]", self.base.name())
    }

    fn base(&self) -> &B {
        &self.base
    }

    fn under(&self, a: &Self::O) -> B::O {
        a.under().clone()
    }

    fn label(&self, a: &Self::O) -> String {
        match a {
            EmObj::Plain(x) => self.base.label(x),
            EmObj::Alg(t) => t.name.clone(),
        }
    }

    fn unit(&self) -> Self::O {
        EmObj::Alg(unit_algebra(&self.base).expect("unit algebra"))
    }

    fn tensor(&self, a: &Self::O, b: &Self::O) -> Result<(Self::O, Coeq)> {
        let EmObj::Alg(bt) = b else {
            return Err(Error::input(format!("{} is not an algebra and cannot sit in the right slot", self.label(b))));
        };
        let s = &self.base;
        let n = a.under();
        let (f, g) = self.pair(n, bt)?;
        let name = format!("({}^{})", self.label(a), bt.name);
        let (obj, mut coeq) = s.coequalize(&f, &g, &s.tensor(n, &bt.obj)?, name.clone())?;
        coeq.proj = mutate(&self.muts, "pi", &[self.label(a), bt.name.clone()], coeq.proj)?;
        Ok(match a {
            EmObj::Plain(_) => (EmObj::Plain(obj), coeq),
            EmObj::Alg(at) => {
                let act = self.psi(at, bt, &obj, &coeq.proj)?;
                (EmObj::Alg(TAlg { name, obj, act }), coeq)
            }
        })
    }

    fn is_morphism(&self, f: &Mor, a: &Self::O, b: &Self::O) -> Result<bool> {
        if !self.base.is_morphism(f, a.under(), b.under())? {
            return Ok(false);
        }
        match (a, b) {
            (EmObj::Plain(_), EmObj::Plain(_)) => Ok(true),
            (EmObj::Alg(x), EmObj::Alg(y)) => Ok(matches!(is_algebra_map(&self.base, f, x, y)?, Outcome::Pass)),
            _ => Ok(false),
        }
    }
}

pub type Em<B> = Lifted<EMQuot<B>>;

/// The objects a horizontal-tensor run works over.
pub struct EmUniverse<X> {
    pub base: Vec<X>,
    pub plain: Vec<EmObj<X>>,
    pub algs: Vec<EmObj<X>>,
}

impl<X: Clone> EmUniverse<X> {
    pub fn new(base: Vec<X>, algs: Vec<TAlg<X>>) -> Self {
        EmUniverse {
            plain: base.iter().cloned().map(EmObj::Plain).collect(),
            algs: algs.into_iter().map(EmObj::Alg).collect(),
            base,
        }
    }

    /// Plain objects followed by algebras.
    pub fn all(&self) -> Vec<EmObj<X>> {
        self.plain.iter().chain(self.algs.iter()).cloned().collect()
    }
}

fn alg_of<X>(o: &EmObj<X>) -> Result<&TAlg<X>> {
    o.alg().ok_or_else(|| Error::input("expected an algebra"))
}

/// `i : A -> R⊛̂A`, the factorization of `α` through `π_{R,A}`, checked to
/// invert `η̄_A`.
pub fn eta_inverse<B: Base>(em: &Em<B>, a: &EmObj<B::O>) -> Result<Outcome> {
    let at = alg_of(a)?;
    let r = em.unit();
    let t = em.tensor_data(&r, a)?;
    let i = t.1.factor(&at.act)?;
    let eta = em.eta(a)?;
    let o = compare(&chain(&[t.1.proj.clone(), i.clone()])?, &at.act)?;
    if !matches!(o, Outcome::Pass) {
        return Ok(fail_note(o, "i∘π = α"));
    }
    let o = compare(&chain(&[eta.clone(), i.clone()])?, &Mor::id(eta.dom()))?;
    if !matches!(o, Outcome::Pass) {
        return Ok(fail_note(o, "i∘η̄ = 1"));
    }
    Ok(fail_note(compare(&chain(&[i, eta.clone()])?, &Mor::id(eta.cod()))?, "η̄∘i = 1"))
}

/// `j : N⊛̂FM -> N⊛M`, the factorization of `μ_{N,M}` through `π`.
pub fn j_map<B: Base>(em: &Em<B>, n: &B::O, m: &B::O) -> Result<(Mor, Mor)> {
    let s = em.base();
    let fm = EmObj::Alg(free_algebra(s, m)?);
    let t = em.tensor_data(&EmObj::Plain(n.clone()), &fm)?;
    let mu = s.mu2(n, m)?;
    Ok((t.1.factor(&mu)?, t.1.proj.clone()))
}

/// `j` is invertible with `j∘π = μ_{N,M}`, and
/// `N⊛TTM ⇉ N⊛TM -> N⊛M` is a split fork with sections `N⊛η_M`,
/// `N⊛Tη_M`.
pub fn j_check<B: Base>(em: &Em<B>, n: &B::O, m: &B::O) -> Result<Outcome> {
    let s = em.base();
    let (j, pi) = j_map(em, n, m)?;
    let mu = s.mu2(n, m)?;
    let o = compare(&chain(&[pi, j.clone()])?, &mu)?;
    if !matches!(o, Outcome::Pass) {
        return Ok(fail_note(o, "j∘π = μ"));
    }
    if let Some((x, y, z)) = j.collision()? {
        return Ok(Outcome::Fail(Witness::new(format!("{x} ~ {y}"), &z, &z).with_note("j is not injective")));
    }
    if let Some(y) = j.missed()? {
        return Ok(Outcome::Fail(Witness::new(y, "-", "-").with_note("j is not surjective")));
    }
    let (tm, ttm) = (s.t(m)?, s.t(&s.t(m)?)?);
    let f = s.whisker_right(n, &s.mu(m)?, &ttm, &tm)?;
    let g = s.mu2(n, &tm)?;
    let sec = s.whisker_right(n, &s.eta(m)?, m, &tm)?;
    let t = s.whisker_right(n, &s.t_mor(&s.eta(m)?, m, &tm)?, &tm, &ttm)?;
    Ok(match check_split_fork(&f, &g, &mu, &sec, &t)? {
        None => Outcome::Pass,
        Some(w) => Outcome::Fail(w.with_note("split fork")),
    })
}

/// The kernel of `π_{N,A⊛̂B}∘(N⊛π_{A,B})` equals the coequalizer of
/// `μ∘(N⊛Tμ_{M,L})` and `N⊛((α⊛L)∘(TM⊛β)∘γ_{R,M,TL})` out of
/// `N⊛T(M⊛TL)`.
pub fn diagonal_check<B: Base>(em: &Em<B>, n: &EmObj<B::O>, a: &EmObj<B::O>, b: &EmObj<B::O>) -> Result<Outcome> {
    let s = em.base();
    let (at, bt) = (alg_of(a)?, alg_of(b)?);
    let (nn, m, l) = (n.under(), &at.obj, &bt.obj);
    let r = s.unit();
    let (tm, tl) = (s.t(m)?, s.t(l)?);
    let m_tl = s.tensor(m, &tl)?;
    let ml = s.tensor(m, l)?;
    let t_mtl = s.t(&m_tl)?;
    let t_ml = s.t(&ml)?;
    let f1 = chain(&[
        s.whisker_right(nn, &s.t_mor(&s.mu2(m, l)?, &m_tl, &ml)?, &t_mtl, &t_ml)?,
        s.mu2(nn, &ml)?,
    ])?;
    let inner = chain(&[
        s.gamma(&r, m, &tl)?,
        s.whisker_right(&tm, &bt.act, &tl, l)?,
        s.whisker_left(&at.act, &tm, m, l)?,
    ])?;
    let f2 = s.whisker_right(nn, &inner, &t_mtl, &ml)?;
    let c = Coeq::of(&f1, &f2, "diag")?;
    let p = em.p_right(n, a, b)?;
    Ok(match same_kernel(&p, &c.proj)? {
        None => Outcome::Pass,
        Some((x, y)) => Outcome::Fail(
            Witness::new(format!("{x} ~ {y}"), p.apply(&x) == p.apply(&y), c.proj.apply(&x) == c.proj.apply(&y))
                .with_note("kernels differ"),
        ),
    })
}

/// `π` coequalizes its pair and has the common section `N⊛η_M`.
pub fn pi_check<B: Base>(em: &Em<B>, n: &EmObj<B::O>, b: &EmObj<B::O>) -> Result<Outcome> {
    let s = em.base();
    let bt = alg_of(b)?;
    let (f, g) = em.q.pair(n.under(), bt)?;
    let pi = em.proj(n, b)?;
    let o = compare(&chain(&[f.clone(), pi.clone()])?, &chain(&[g.clone(), pi])?)?;
    if !matches!(o, Outcome::Pass) {
        return Ok(fail_note(o, "π does not coequalize"));
    }
    let sec = s.whisker_right(n.under(), &s.eta(&bt.obj)?, &bt.obj, &s.t(&bt.obj)?)?;
    let id = Mor::id(sec.dom());
    let o = compare(&chain(&[sec.clone(), f])?, &id)?;
    if !matches!(o, Outcome::Pass) {
        return Ok(fail_note(o, "not reflexive"));
    }
    Ok(fail_note(compare(&chain(&[sec, g])?, &id)?, "not reflexive"))
}

/// `ψ` is an algebra structure with `ψ∘(R⊛π) = π∘(α⊛M)∘γ_{R,N,M}`.
pub fn psi_check<B: Base>(em: &Em<B>, a: &EmObj<B::O>, b: &EmObj<B::O>) -> Result<Outcome> {
    let s = em.base();
    let (at, bt) = (alg_of(a)?, alg_of(b)?);
    let ab = em.tensor(a, b)?;
    let abt = alg_of(&ab)?;
    let pi = em.proj(a, b)?;
    let (n, m) = (&at.obj, &bt.obj);
    let r = s.unit();
    let nm = s.tensor(n, m)?;
    let l = chain(&[s.whisker_right(&r, &pi, &nm, &abt.obj)?, abt.act.clone()])?;
    let rr = chain(&[s.gamma(&r, n, m)?, s.whisker_left(&at.act, &s.t(n)?, n, m)?, pi])?;
    let o = compare(&l, &rr)?;
    if !matches!(o, Outcome::Pass) {
        return Ok(fail_note(o, "ψ∘(R⊛π) = π∘(α⊛M)∘γ"));
    }
    algebra_laws(s, abt)
}

/// The forgetful functor `G : M^T -> M` with `G₂ = π` and `G₀ = 1`.
pub struct Forget<'a, B: Base> {
    pub em: &'a Em<B>,
}

impl<B: Base> SkewFunctor for Forget<'_, B> {
    type S = Em<B>;
    type T = B;

    fn name(&self) -> String {
        "G".into()
    }

    fn src(&self) -> &Em<B> {
        self.em
    }

    fn tgt(&self) -> &B {
        self.em.base()
    }

    fn obj(&self, a: &EmObj<B::O>) -> Result<B::O> {
        Ok(a.under().clone())
    }

    fn fmap(&self, f: &Mor, _a: &EmObj<B::O>, _b: &EmObj<B::O>) -> Result<Mor> {
        Ok(f.clone())
    }

    fn f2(&self, a: &EmObj<B::O>, b: &EmObj<B::O>) -> Result<Mor> {
        self.em.proj(a, b)
    }

    fn f0(&self) -> Result<Mor> {
        Ok(Mor::id(&self.em.base().carrier(&self.em.base().unit())))
    }
}

/// `G(A⊛̂B)` is on the nose the quotient computed with `A` forgotten.
pub fn g_strict<B: Base>(em: &Em<B>, a: &EmObj<B::O>, b: &EmObj<B::O>) -> Result<Outcome> {
    let ga = EmObj::Plain(a.under().clone());
    let x = em.proj(a, b)?;
    let y = em.proj(&ga, b)?;
    compare(&x, &y)
}

fn lbl<B: Base>(em: &Em<B>, xs: &[&EmObj<B::O>]) -> String {
    xs.iter().map(|x| em.label(x)).collect::<Vec<_>>().join(",")
}

/// The full battery for the horizontal tensor: monad laws, algebra laws,
/// `π` and `ψ`, the skew monoidal axioms on algebras, the right action on
/// plain objects, coherence maps being algebra maps, invertibility of
/// `η̄`, the `j` isomorphism, the diagonal description of the iterated
/// tensor, and `G`.
pub fn em_checks<'a, B: Base>(em: &'a Em<B>, u: &'a EmUniverse<B::O>) -> Vec<Check<'a>> {
    let s = em.base();
    let mut out = monad_checks("em", s, &u.base);

    let cases = u.algs.iter().map(|a| em.label(a)).collect();
    out.push(Check::new("em.algebras", cases, move |i| {
        Outcome::from_result(alg_of(&u.algs[i]).and_then(|a| algebra_laws(s, a)))
    }));

    let all: Vec<(usize, usize)> = (0..u.plain.len() + u.algs.len())
        .flat_map(|n| (0..u.algs.len()).map(move |b| (n, b)))
        .collect();
    let left = |i: usize| if i < u.plain.len() { &u.plain[i] } else { &u.algs[i - u.plain.len()] };
    let cases = all.iter().map(|&(n, b)| lbl(em, &[left(n), &u.algs[b]])).collect();
    out.push(Check::new("em.pi", cases, move |i| {
        let (n, b) = all[i];
        Outcome::from_result(pi_check(em, left(n), &u.algs[b]))
    }));

    let pairs = tuples(u.algs.len(), 2);
    let cases = pairs.iter().map(|p| lbl(em, &[&u.algs[p[0]], &u.algs[p[1]]])).collect();
    let p2 = pairs.clone();
    out.push(Check::new("em.psi", cases, move |i| {
        Outcome::from_result(psi_check(em, &u.algs[p2[i][0]], &u.algs[p2[i][1]]))
    }));

    out.extend(smc_checks("em", em, &u.algs));
    out.extend(actegory_checks("em", em, &u.plain, &u.algs, ["act-SMC1", "act-SMC3", "act-SMC4"]));

    let triples = tuples(u.algs.len(), 3);
    let cases = triples.iter().map(|t| lbl(em, &[&u.algs[t[0]], &u.algs[t[1]], &u.algs[t[2]]])).collect();
    out.push(Check::new("em.coherence-are-algebra-maps", cases, move |i| {
        let t = &triples[i];
        let (a, b, c) = (&u.algs[t[0]], &u.algs[t[1]], &u.algs[t[2]]);
        Outcome::from_result((|| {
            let src = em.tensor(a, &em.tensor(b, c)?)?;
            let tgt = em.tensor(&em.tensor(a, b)?, c)?;
            let o = is_algebra_map(s, &em.gamma(a, b, c)?, alg_of(&src)?, alg_of(&tgt)?)?;
            if !matches!(o, Outcome::Pass) || t[1] != 0 || t[2] != 0 {
                return Ok(fail_note(o, "γ̄"));
            }
            // once per algebra: the unit and counit
            let r = em.unit();
            let o = is_algebra_map(s, &em.eta(a)?, alg_of(a)?, alg_of(&em.tensor(&r, a)?)?)?;
            if !matches!(o, Outcome::Pass) {
                return Ok(fail_note(o, "η̄"));
            }
            Ok(fail_note(is_algebra_map(s, &em.eps(a)?, alg_of(&em.tensor(a, &r)?)?, alg_of(a)?)?, "ε̄"))
        })())
    }));

    let cases = u.algs.iter().map(|a| em.label(a)).collect();
    out.push(Check::new("em.eta-invertible", cases, move |i| Outcome::from_result(eta_inverse(em, &u.algs[i]))));

    let bp = tuples(u.base.len(), 2);
    let cases = bp.iter().map(|p| format!("{},{}", s.label(&u.base[p[0]]), s.label(&u.base[p[1]]))).collect();
    out.push(Check::new("em.j", cases, move |i| {
        Outcome::from_result(j_check(em, &u.base[bp[i][0]], &u.base[bp[i][1]]))
    }));

    let diag: Vec<(usize, usize, usize)> = (0..u.plain.len())
        .flat_map(|n| pairs.iter().map(move |p| (n, p[0], p[1])))
        .collect();
    let cases = diag.iter().map(|&(n, a, b)| lbl(em, &[&u.plain[n], &u.algs[a], &u.algs[b]])).collect();
    out.push(Check::new("em.diagonal", cases, move |i| {
        let (n, a, b) = diag[i];
        Outcome::from_result(diagonal_check(em, &u.plain[n], &u.algs[a], &u.algs[b]))
    }));

    out
}

/// Checks on `G`, with its functor equations taken over algebras.
pub fn forget_checks<'a, B: Base>(g: &'a Forget<'a, B>, u: &'a EmUniverse<B::O>) -> Vec<Check<'a>> {
    let em = g.em;
    let mut out = crate::skewmon::functor_checks("em.G", g, &u.algs);
    let pairs = tuples(u.algs.len(), 2);
    let cases = pairs.iter().map(|p| lbl(em, &[&u.algs[p[0]], &u.algs[p[1]]])).collect();
    out.push(Check::new("em.G.strict", cases, move |i| {
        Outcome::from_result(g_strict(em, &u.algs[pairs[i][0]], &u.algs[pairs[i][1]]))
    }));
    out
}

/// The right action `A▹N` makes algebras a right skew actegory over the
/// base: `A▹N` is an algebra, `γ_{M,L,K}` and `ε_M` are algebra maps, and
/// the three action equations hold.
pub fn ract_checks<'a, S: SkewOps>(s: &'a S, algs: &'a [TAlg<S::O>], objs: &'a [S::O]) -> Vec<Check<'a>> {
    let quads: Vec<(usize, Vec<usize>)> = (0..algs.len())
        .flat_map(|a| tuples(objs.len(), 3).into_iter().map(move |t| (a, t)))
        .collect();
    let lab = move |a: usize, t: &[usize]| {
        let mut v = vec![algs[a].name.clone()];
        v.extend(t.iter().map(|&i| s.label(&objs[i])));
        v.join(",")
    };
    let cases = quads.iter().map(|(a, t)| lab(*a, t)).collect();
    let pairs: Vec<(usize, usize)> = (0..algs.len()).flat_map(|a| (0..objs.len()).map(move |n| (a, n))).collect();
    let pcases: Vec<String> = pairs.iter().map(|&(a, n)| lab(a, &[n])).collect();
    let p2 = pairs.clone();
    vec![
        Check::new("strengths.ract-1", cases, move |i| {
            let (a, t) = &quads[i];
            let al = &algs[*a];
            let (l, m, n) = (&objs[t[0]], &objs[t[1]], &objs[t[2]]);
            Outcome::from_result((|| {
                let src = act_right(s, al, &s.tensor(l, m)?)?;
                let tgt = act_right(s, &act_right(s, al, l)?, m)?;
                let o = is_algebra_map(s, &s.gamma(&al.obj, l, m)?, &src, &tgt)?;
                if !matches!(o, Outcome::Pass) {
                    return Ok(o);
                }
                let (lhs, rhs) = crate::skewmon::smc1(s, &al.obj, l, m, n)?;
                compare(&lhs, &rhs)
            })())
        }),
        Check::new("strengths.ract-2", pcases.clone(), move |i| {
            let (a, n) = pairs[i];
            crate::cat::equation(|| crate::skewmon::smc4(s, &algs[a].obj, &objs[n]))
        }),
        Check::new("strengths.ract-3", pcases, move |i| {
            let (a, n) = p2[i];
            let al = &algs[a];
            Outcome::from_result((|| {
                let r = s.unit();
                let o = is_algebra_map(s, &s.eps(&al.obj)?, &act_right(s, al, &r)?, al)?;
                if !matches!(o, Outcome::Pass) {
                    return Ok(o);
                }
                let (lhs, rhs) = crate::skewmon::smc3(s, &al.obj, &objs[n])?;
                compare(&lhs, &rhs)
            })())
        }),
    ]
}

/// The lift `K̄ : M^T -> M'^T'` of a skew monoidal functor `K`:
/// `K̄(M,α) = (KM, Kα∘K₂_{R,M}∘(K₀⊛'KM))`, with `K̄₂` the factorization of
/// `Kπ∘K₂` through `π'` and `K̄₀ = K₀`.
pub struct LiftFunctor<'a, K: SkewFunctor>
where
    K::S: Base,
    K::T: Base,
{
    pub name: String,
    pub k: &'a K,
    pub src: &'a Em<K::S>,
    pub tgt: &'a Em<K::T>,
}

impl<K: SkewFunctor> LiftFunctor<'_, K>
where
    K::S: Base,
    K::T: Base,
{
    /// The action `K̄α`.
    pub fn lift_action(&self, a: &TAlg<<K::S as SkewOps>::O>) -> Result<Mor> {
        let (s, t) = (self.k.src(), self.k.tgt());
        let km = self.k.obj(&a.obj)?;
        let r = s.unit();
        let kr = self.k.obj(&r)?;
        let kappa = chain(&[t.whisker_left(&self.k.f0()?, &t.unit(), &kr, &km)?, self.k.f2(&r, &a.obj)?])?;
        chain(&[kappa, self.k.fmap(&a.act, &s.t(&a.obj)?, &a.obj)?])
    }
}

impl<K: SkewFunctor> SkewFunctor for LiftFunctor<'_, K>
where
    K::S: Base,
    K::T: Base,
{
    type S = Em<K::S>;
    type T = Em<K::T>;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn src(&self) -> &Em<K::S> {
        self.src
    }

    fn tgt(&self) -> &Em<K::T> {
        self.tgt
    }

    fn obj(&self, a: &EmObj<<K::S as SkewOps>::O>) -> Result<EmObj<<K::T as SkewOps>::O>> {
        Ok(match a {
            EmObj::Plain(x) => EmObj::Plain(self.k.obj(x)?),
            EmObj::Alg(t) => EmObj::Alg(TAlg {
                name: format!("{}({})", self.name, t.name),
                obj: self.k.obj(&t.obj)?,
                act: self.lift_action(t)?,
            }),
        })
    }

    fn fmap(&self, f: &Mor, a: &EmObj<<K::S as SkewOps>::O>, b: &EmObj<<K::S as SkewOps>::O>) -> Result<Mor> {
        self.k.fmap(f, a.under(), b.under())
    }

    fn f2(&self, a: &EmObj<<K::S as SkewOps>::O>, b: &EmObj<<K::S as SkewOps>::O>) -> Result<Mor> {
        let (ka, kb) = (self.obj(a)?, self.obj(b)?);
        let ab = self.src.tensor_data(a, b)?;
        let h = chain(&[
            self.k.f2(a.under(), b.under())?,
            self.k.fmap(&ab.1.proj, &self.k.src().tensor(a.under(), b.under())?, ab.0.under())?,
        ])?;
        self.tgt.tensor_data(&ka, &kb)?.1.factor(&h)
    }

    fn f0(&self) -> Result<Mor> {
        self.k.f0()
    }
}

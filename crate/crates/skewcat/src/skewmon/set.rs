//! The two skew monoidal structures on finite sets built into the engine:
//! the cartesian baseline and the dot structure `M•N = Hom(R,M) x N`
//! determined by an object `R`.

use crate::backends::coeq::{same_kernel, Coeq};
use crate::backends::finset::{eval_fun, id_fun, post_fun, product_mor_on, Elem, Mor, Obj};
use crate::cat::{compare, equation, Check, Outcome, Witness};
use crate::error::{Error, Result};
use crate::mutate::{mutate, Mutation};

use super::{chain, Base, SkewFunctor, SkewOps};

#[derive(Clone, Debug)]
pub enum Shape {
    /// `M x N` with unit the point.
    Cartesian,
    /// `Hom(R,M) x N` with unit `R`.
    Dot { r: Obj },
}

#[derive(Clone)]
pub struct SetSkew {
    pub shape: Shape,
    unit: Obj,
    pub muts: Vec<Mutation>,
}

impl SetSkew {
    pub fn cartesian() -> SetSkew {
        SetSkew {
            shape: Shape::Cartesian,
            unit: Obj::atoms("R", &["*"]),
            muts: Vec::new(),
        }
    }

    pub fn dot(r: &Obj) -> SetSkew {
        SetSkew {
            shape: Shape::Dot { r: r.renamed("R") },
            unit: r.renamed("R"),
            muts: Vec::new(),
        }
    }

    pub fn with_mutations(mut self, muts: Vec<Mutation>) -> SetSkew {
        self.muts = muts;
        self
    }

    pub fn is_dot(&self) -> bool {
        matches!(self.shape, Shape::Dot { .. })
    }

    /// `E = Hom(R,R)`.
    pub fn endo(&self) -> Obj {
        Obj::hom(&self.unit, &self.unit)
    }

    /// Apply `h` in the left slot of a tensor element.
    fn wl_elem(&self, h: &dyn Fn(&Elem) -> Elem, x: &Elem) -> Elem {
        match &self.shape {
            Shape::Cartesian => Elem::pair(h(x.fst()), x.snd().clone()),
            Shape::Dot { .. } => Elem::pair(Elem::fun(x.fst().table().iter().map(h).collect()), x.snd().clone()),
        }
    }

    fn wr_elem(&self, h: &dyn Fn(&Elem) -> Elem, x: &Elem) -> Elem {
        Elem::pair(x.fst().clone(), h(x.snd()))
    }

    fn at(objs: &[&Obj]) -> Vec<String> {
        objs.iter().map(|o| o.name().to_string()).collect()
    }

    fn check_dom(f: &Mor, a: &Obj, b: &Obj) -> Result<()> {
        if f.dom().same(a) && f.cod().same(b) {
            Ok(())
        } else {
            Err(Error::input(format!("{f:?} is not a map {a} -> {b}")))
        }
    }

    /// The strength `Γ_{V,M,N} : V⊗(M⊛N) -> (V⊗M)⊛N`, `(v,x) ↦ (in_v⊛N)(x)`.
    pub fn strength(&self, v: &Obj, m: &Obj, n: &Obj) -> Result<Mor> {
        let dom = Obj::product(v, &self.tensor(m, n)?);
        let cod = self.tensor(&Obj::product(v, m), n)?;
        let me = self.clone();
        let g = Mor::new(&dom, &cod, move |x| {
            let vv = x.fst().clone();
            me.wl_elem(&|y| Elem::pair(vv.clone(), y.clone()), x.snd())
        });
        mutate(&self.muts, "Gamma", &Self::at(&[v, m, n]), g)
    }

    /// `Γ'_{V,M,N} : V⊗(M⊛N) -> M⊛(V⊗N)`, `(v,x) ↦ (M⊛in_v)(x)`.
    pub fn strength_prime(&self, v: &Obj, m: &Obj, n: &Obj) -> Result<Mor> {
        let dom = Obj::product(v, &self.tensor(m, n)?);
        let cod = self.tensor(m, &Obj::product(v, n))?;
        let me = self.clone();
        let g = Mor::new(&dom, &cod, move |x| {
            let vv = x.fst().clone();
            me.wr_elem(&|y| Elem::pair(vv.clone(), y.clone()), x.snd())
        });
        mutate(&self.muts, "Gamma'", &Self::at(&[v, m, n]), g)
    }

    /// `ev_{R,M} : Hom(R,M) ⊗ R -> M`.
    pub fn ev(&self, m: &Obj) -> Mor {
        let r = self.unit.clone();
        let ev = Mor::new(&Obj::product(&Obj::hom(&r, m), &r), m, move |x| eval_fun(&r, x.fst(), x.snd()));
        mutate(&self.muts, "ev", &[m.name().to_string()], ev.clone()).unwrap_or(ev)
    }
}

impl SkewOps for SetSkew {
    type O = Obj;

    fn name(&self) -> String {
        match &self.shape {
            Shape::Cartesian => "cartesian".into(),
            Shape::Dot { r } => format!("dot(|R|={})", r.size()),
        }
    }

    fn label(&self, a: &Obj) -> String {
        a.name().to_string()
    }

    fn carrier(&self, a: &Obj) -> Obj {
        a.clone()
    }

    fn unit(&self) -> Obj {
        self.unit.clone()
    }

    fn tensor(&self, a: &Obj, b: &Obj) -> Result<Obj> {
        let name = format!("({}*{})", a.name(), b.name());
        Ok(match &self.shape {
            Shape::Cartesian => Obj::product_named(a, b, name),
            Shape::Dot { r } => Obj::product_named(&Obj::hom(r, a), b, name),
        })
    }

    fn whisker_left(&self, f: &Mor, a: &Obj, a2: &Obj, b: &Obj) -> Result<Mor> {
        Self::check_dom(f, a, a2)?;
        let (dom, cod) = (self.tensor(a, b)?, self.tensor(a2, b)?);
        let (me, f) = (self.clone(), f.clone());
        Ok(Mor::new(&dom, &cod, move |x| me.wl_elem(&|y| f.apply(y), x)))
    }

    fn whisker_right(&self, a: &Obj, g: &Mor, b: &Obj, b2: &Obj) -> Result<Mor> {
        Self::check_dom(g, b, b2)?;
        let (dom, cod) = (self.tensor(a, b)?, self.tensor(a, b2)?);
        let g = g.clone();
        Ok(Mor::new(&dom, &cod, move |x| Elem::pair(x.fst().clone(), g.apply(x.snd()))))
    }

    fn gamma(&self, l: &Obj, m: &Obj, n: &Obj) -> Result<Mor> {
        let dom = self.tensor(l, &self.tensor(m, n)?)?;
        let cod = self.tensor(&self.tensor(l, m)?, n)?;
        let g = match &self.shape {
            Shape::Cartesian => Mor::new(&dom, &cod, |x| {
                Elem::pair(Elem::pair(x.fst().clone(), x.snd().fst().clone()), x.snd().snd().clone())
            }),
            // (f,(g,n)) ↦ (r ↦ (f, g r), n)
            Shape::Dot { .. } => Mor::new(&dom, &cod, |x| {
                let f = x.fst();
                let g = x.snd().fst();
                let col = g.table().iter().map(|gr| Elem::pair(f.clone(), gr.clone())).collect();
                Elem::pair(Elem::fun(col), x.snd().snd().clone())
            }),
        };
        mutate(&self.muts, "gamma", &Self::at(&[l, m, n]), g)
    }

    fn eta(&self, m: &Obj) -> Result<Mor> {
        let cod = self.tensor(&self.unit, m)?;
        let u = match &self.shape {
            Shape::Cartesian => Elem::atom("*"),
            Shape::Dot { r } => id_fun(r)?,
        };
        let e = Mor::new(m, &cod, move |x| Elem::pair(u.clone(), x.clone()));
        mutate(&self.muts, "eta", &Self::at(&[m]), e)
    }

    fn eps(&self, m: &Obj) -> Result<Mor> {
        let dom = self.tensor(m, &self.unit)?;
        let e = match &self.shape {
            Shape::Cartesian => Mor::new(&dom, m, |x| x.fst().clone()),
            Shape::Dot { r } => {
                let r = r.clone();
                Mor::new(&dom, m, move |x| eval_fun(&r, x.fst(), x.snd()))
            }
        };
        mutate(&self.muts, "eps", &Self::at(&[m]), e)
    }

    fn hom(&self, a: &Obj, b: &Obj) -> Result<Vec<Mor>> {
        crate::backends::finset::hom_set(a, b)
    }
}

impl Base for SetSkew {
    fn coequalize(&self, f: &Mor, g: &Mor, tgt: &Obj, name: String) -> Result<(Obj, Coeq)> {
        if !f.cod().same(tgt) {
            return Err(Error::input(format!("pair does not land in {tgt}")));
        }
        let c = Coeq::of(f, g, name)?;
        Ok((c.obj.clone(), c))
    }
}

// ---- the symmetric monoidal structure of sets acting by copowers ----

/// `a_{U,V,M} : U⊗(V⊗M) -> (U⊗V)⊗M`.
pub fn v_assoc(u: &Obj, v: &Obj, m: &Obj) -> Mor {
    let dom = Obj::product(u, &Obj::product(v, m));
    let cod = Obj::product(&Obj::product(u, v), m);
    Mor::new(&dom, &cod, |x| {
        Elem::pair(Elem::pair(x.fst().clone(), x.snd().fst().clone()), x.snd().snd().clone())
    })
}

pub fn v_assoc_inv(u: &Obj, v: &Obj, m: &Obj) -> Mor {
    let dom = Obj::product(&Obj::product(u, v), m);
    let cod = Obj::product(u, &Obj::product(v, m));
    Mor::new(&dom, &cod, |x| {
        Elem::pair(x.fst().fst().clone(), Elem::pair(x.fst().snd().clone(), x.snd().clone()))
    })
}

/// The monoidal unit `I` of sets.
pub fn v_unit() -> Obj {
    Obj::point()
}

/// `l_M : M -> I⊗M`.
pub fn v_lunit(m: &Obj) -> Mor {
    Mor::new(m, &Obj::product(&v_unit(), m), |x| Elem::pair(Elem::atom("*"), x.clone()))
}

/// `s_{U,V} ⊗ M : (U⊗V)⊗M -> (V⊗U)⊗M`.
pub fn v_swap_on(u: &Obj, v: &Obj, m: &Obj) -> Mor {
    let dom = Obj::product(&Obj::product(u, v), m);
    let cod = Obj::product(&Obj::product(v, u), m);
    Mor::new(&dom, &cod, |x| {
        Elem::pair(Elem::pair(x.fst().snd().clone(), x.fst().fst().clone()), x.snd().clone())
    })
}

/// `V⊗h`.
pub fn v_copower(v: &Obj, h: &Mor) -> Mor {
    product_mor_on(&Obj::product(v, h.dom()), &Obj::product(v, h.cod()), &Mor::id(v), h)
}

// ---- strength axioms ----

pub fn sma<'s>(s: &'s SetSkew, which: u8, u: &Obj, v: &Obj, l: &Obj, m: &Obj, n: &Obj) -> Result<(Mor, Mor)> {
    let t = |a: &Obj, b: &Obj| s.tensor(a, b);
    let cp = Obj::product;
    Ok(match which {
        6 => {
            // Γ_{U⊗V,M,N}∘a = (a⊛N)∘Γ_{U,V⊗M,N}∘(U⊗Γ_{V,M,N})
            let mn = t(m, n)?;
            let uv = cp(u, v);
            let lhs = chain(&[v_assoc(u, v, &mn), s.strength(&uv, m, n)?])?;
            let rhs = chain(&[
                v_copower(u, &s.strength(v, m, n)?),
                s.strength(u, &cp(v, m), n)?,
                s.whisker_left(&v_assoc(u, v, m), &cp(u, &cp(v, m)), &cp(&uv, m), n)?,
            ])?;
            (lhs, rhs)
        }
        7 => {
            let i = v_unit();
            let lhs = chain(&[v_lunit(&t(m, n)?), s.strength(&i, m, n)?])?;
            let rhs = s.whisker_left(&v_lunit(m), m, &cp(&i, m), n)?;
            (lhs, rhs)
        }
        8 => {
            let mn = t(m, n)?;
            let uv = cp(u, v);
            let lhs = chain(&[v_assoc(u, v, &mn), s.strength_prime(&uv, m, n)?])?;
            let rhs = chain(&[
                v_copower(u, &s.strength_prime(v, m, n)?),
                s.strength_prime(u, m, &cp(v, n))?,
                s.whisker_right(m, &v_assoc(u, v, n), &cp(u, &cp(v, n)), &cp(&uv, n))?,
            ])?;
            (lhs, rhs)
        }
        9 => {
            let i = v_unit();
            let lhs = chain(&[v_lunit(&t(m, n)?), s.strength_prime(&i, m, n)?])?;
            let rhs = s.whisker_right(m, &v_lunit(n), n, &cp(&i, n))?;
            (lhs, rhs)
        }
        10 => {
            let mn = t(m, n)?;
            let lhs = chain(&[v_copower(u, &s.strength(v, m, n)?), s.strength_prime(u, &cp(v, m), n)?])?;
            let rhs = chain(&[
                v_assoc(u, v, &mn),
                v_swap_on(u, v, &mn),
                v_assoc_inv(v, u, &mn),
                v_copower(v, &s.strength_prime(u, m, n)?),
                s.strength(v, m, &cp(u, n))?,
            ])?;
            (lhs, rhs)
        }
        11 => {
            // γ_{V⊗L,M,N}∘Γ_{V,L,M⊛N} = (Γ_{V,L,M}⊛N)∘Γ_{V,L⊛M,N}∘(V⊗γ)
            let mn = t(m, n)?;
            let lm = t(l, m)?;
            let lhs = chain(&[s.strength(v, l, &mn)?, s.gamma(&cp(v, l), m, n)?])?;
            let rhs = chain(&[
                v_copower(v, &s.gamma(l, m, n)?),
                s.strength(v, &lm, n)?,
                s.whisker_left(&s.strength(v, l, m)?, &cp(v, &lm), &t(&cp(v, l), m)?, n)?,
            ])?;
            (lhs, rhs)
        }
        12 => {
            let mn = t(m, n)?;
            let lm = t(l, m)?;
            let lhs = chain(&[
                s.strength_prime(v, l, &mn)?,
                s.whisker_right(l, &s.strength(v, m, n)?, &cp(v, &mn), &t(&cp(v, m), n)?)?,
                s.gamma(l, &cp(v, m), n)?,
            ])?;
            let rhs = chain(&[
                v_copower(v, &s.gamma(l, m, n)?),
                s.strength(v, &lm, n)?,
                s.whisker_left(&s.strength_prime(v, l, m)?, &cp(v, &lm), &t(l, &cp(v, m))?, n)?,
            ])?;
            (lhs, rhs)
        }
        13 => {
            let mn = t(m, n)?;
            let lhs = chain(&[
                s.strength_prime(v, l, &mn)?,
                s.whisker_right(l, &s.strength_prime(v, m, n)?, &cp(v, &mn), &t(m, &cp(v, n))?)?,
                s.gamma(l, m, &cp(v, n))?,
            ])?;
            let rhs = chain(&[v_copower(v, &s.gamma(l, m, n)?), s.strength_prime(v, &t(l, m)?, n)?])?;
            (lhs, rhs)
        }
        14 => {
            let r = s.unit();
            let lhs = chain(&[v_copower(v, &s.eta(m)?), s.strength_prime(v, &r, m)?])?;
            (lhs, s.eta(&cp(v, m))?)
        }
        15 => {
            let r = s.unit();
            let lhs = chain(&[s.strength(v, m, &r)?, s.eps(&cp(v, m))?])?;
            (lhs, v_copower(v, &s.eps(m)?))
        }
        _ => return Err(Error::input(format!("no strength axiom sma-{which}"))),
    })
}

/// Which slots each strength axiom quantifies over: (uses U, uses V, uses L).
fn sma_slots(which: u8) -> (bool, bool, bool) {
    match which {
        6 | 8 | 10 => (true, true, false),
        7 | 9 => (false, false, false),
        11..=13 => (false, true, true),
        _ => (false, true, false),
    }
}

/// sma-6 .. sma-15. `vs` are the sets acting by copowers; `objs` the
/// universe of the structure.
pub fn strength_checks<'a>(s: &'a SetSkew, vs: &'a [Obj], objs: &'a [Obj]) -> Vec<Check<'a>> {
    let mut out = Vec::new();
    for which in 6u8..=15 {
        let (use_u, use_v, use_l) = sma_slots(which);
        let uniq = [Obj::point()];
        let us: &[Obj] = if use_u { vs } else { &uniq };
        let vv: &[Obj] = if use_v { vs } else { &uniq };
        let two_obj = !matches!(which, 14 | 15);
        let mut cases: Vec<(Obj, Obj, Obj, Obj, Obj)> = Vec::new();
        let mut labels = Vec::new();
        for u in us {
            for v in vv {
                let ls: Vec<&Obj> = if use_l { objs.iter().collect() } else { vec![&uniq[0]] };
                for l in ls {
                    for m in objs {
                        let ns: Vec<&Obj> = if two_obj { objs.iter().collect() } else { vec![&uniq[0]] };
                        for n in ns {
                            let mut lab = Vec::new();
                            if use_u {
                                lab.push(u.name().to_string());
                            }
                            if use_v || matches!(which, 14 | 15) {
                                lab.push(v.name().to_string());
                            }
                            if use_l {
                                lab.push(l.name().to_string());
                            }
                            lab.push(m.name().to_string());
                            if two_obj {
                                lab.push(n.name().to_string());
                            }
                            labels.push(lab.join(","));
                            cases.push((u.clone(), v.clone(), l.clone(), m.clone(), n.clone()));
                        }
                    }
                }
            }
        }
        out.push(Check::new(format!("strengths.sma-{which}"), labels, move |i| {
            let (u, v, l, m, n) = &cases[i];
            equation(|| sma(s, which, u, v, l, m, n))
        }));
    }
    out
}

// ---- the functor H = Hom(R,-) into the cartesian structure ----

/// `H = Hom(R,-)` from a dot structure to the cartesian one, with
/// `H₂(f,g) = r ↦ (f, g r)` and `H₀ = id_R`.
pub struct HomFunctor {
    pub dot: SetSkew,
    pub cart: SetSkew,
}

impl HomFunctor {
    pub fn new(dot: &SetSkew) -> Result<HomFunctor> {
        if !dot.is_dot() {
            return Err(Error::input("Hom(R,-) is only defined for the dot structure"));
        }
        Ok(HomFunctor {
            dot: dot.clone(),
            cart: SetSkew::cartesian(),
        })
    }

    fn h(&self, m: &Obj) -> Obj {
        Obj::hom(&self.dot.unit(), m).renamed(format!("H{}", m.name()))
    }
}

impl SkewFunctor for HomFunctor {
    type S = SetSkew;
    type T = SetSkew;

    fn name(&self) -> String {
        "H".into()
    }

    fn src(&self) -> &SetSkew {
        &self.dot
    }

    fn tgt(&self) -> &SetSkew {
        &self.cart
    }

    fn obj(&self, a: &Obj) -> Result<Obj> {
        Ok(self.h(a))
    }

    fn fmap(&self, f: &Mor, a: &Obj, b: &Obj) -> Result<Mor> {
        let f = f.clone();
        Ok(Mor::new(&self.h(a), &self.h(b), move |x| post_fun(&f, x)))
    }

    fn f2(&self, a: &Obj, b: &Obj) -> Result<Mor> {
        let dom = self.cart.tensor(&self.h(a), &self.h(b))?;
        let cod = self.h(&self.dot.tensor(a, b)?);
        Ok(Mor::new(&dom, &cod, |x| {
            let f = x.fst();
            Elem::fun(x.snd().table().iter().map(|gr| Elem::pair(f.clone(), gr.clone())).collect())
        }))
    }

    fn f0(&self) -> Result<Mor> {
        let id = id_fun(&self.dot.unit())?;
        Ok(Mor::new(&self.cart.unit(), &self.h(&self.dot.unit()), move |_| id.clone()))
    }
}

// ---- exactness spot check ----

/// A reflexive pair `B+1 ⇉ B` identifying two points of `B`, with its
/// common section.
pub fn sample_reflexive_pair(b: &Obj, i: usize, j: usize) -> Result<(Mor, Mor, Mor)> {
    let elems = b.elems()?;
    let (x, y) = (elems[i].clone(), elems[j].clone());
    let extra = Obj::atoms("1", &["+"]);
    let a = Obj::sum(
        format!("({}+1)", b.name()),
        vec![(Elem::atom("in"), b.clone()), (Elem::atom("new"), extra)],
    );
    let f = Mor::new(&a, b, move |z| if z.fst() == &Elem::atom("in") { z.snd().clone() } else { x.clone() });
    let g = Mor::new(&a, b, move |z| if z.fst() == &Elem::atom("in") { z.snd().clone() } else { y.clone() });
    let s = Mor::new(b, &a, |z| Elem::pair(Elem::atom("in"), z.clone()));
    Ok((f, g, s))
}

/// Whether `M⊛-` sends the coequalizer of a reflexive pair to a
/// coequalizer: `M⊛q` must be onto and have the kernel of the coequalizer
/// of `(M⊛f, M⊛g)`.
pub fn preserves_coequalizer(s: &SetSkew, m: &Obj, f: &Mor, g: &Mor) -> Result<Outcome> {
    let b = f.cod().clone();
    let a = f.dom().clone();
    let q = Coeq::of(f, g, format!("{}/~", b.name()))?;
    let mq = s.whisker_right(m, &q.proj, &b, &q.obj)?;
    if let Some(y) = mq.missed()? {
        return Ok(Outcome::Fail(Witness::new(y, "-", "-").with_note("M⊛q is not onto")));
    }
    let mf = s.whisker_right(m, f, &a, &b)?;
    let mg = s.whisker_right(m, g, &a, &b)?;
    let c = Coeq::of(&mf, &mg, "c")?;
    Ok(match same_kernel(&mq, &c.proj)? {
        None => Outcome::Pass,
        Some((x, y)) => Outcome::Fail(
            Witness::new(format!("{x} ~ {y}"), mq.apply(&x), mq.apply(&y)).with_note("kernels differ"),
        ),
    })
}

/// Three sampled reflexive coequalizers, rotated by `seed`, pushed through
/// `M⊛-` for every universe object `M`.
pub fn r2_check<'a>(s: &'a SetSkew, objs: &'a [Obj], seed: u64) -> Check<'a> {
    let mut samples: Vec<(usize, usize, usize)> = Vec::new();
    for (k, b) in objs.iter().enumerate() {
        let n = b.size();
        for i in 0..n {
            for j in i + 1..n {
                samples.push((k, i, j));
            }
        }
    }
    let picked: Vec<(usize, usize, usize)> = if samples.is_empty() {
        Vec::new()
    } else {
        let start = (seed as usize) % samples.len();
        (0..3.min(samples.len())).map(|k| samples[(start + k) % samples.len()]).collect()
    };
    let cases: Vec<(usize, (usize, usize, usize))> =
        (0..objs.len()).flat_map(|m| picked.iter().map(move |p| (m, *p))).collect();
    let labels = cases
        .iter()
        .map(|(m, (k, i, j))| format!("{},{}[{i}~{j}]", objs[*m].name(), objs[*k].name()))
        .collect();
    Check::new("exact.r2", labels, move |c| {
        let (m, (k, i, j)) = cases[c];
        Outcome::from_result((|| {
            let (f, g, sec) = sample_reflexive_pair(&objs[k], i, j)?;
            let id = Mor::id(&objs[k]);
            if let Outcome::Fail(w) = compare(&chain(&[sec.clone(), f.clone()])?, &id)? {
                return Ok(Outcome::Fail(w.with_note("sampled pair is not reflexive")));
            }
            preserves_coequalizer(s, &objs[m], &f, &g)
        })())
    })
}

/// Componentwise agreement of the dot structure at `|R| = 1` with the
/// cartesian one, under the bijection `Hom(1,M) x N ≅ M x N`.
pub fn dot1_matches_cartesian(dot: &SetSkew, objs: &[Obj]) -> Result<Option<Witness>> {
    let cart = SetSkew::cartesian();
    if dot.unit().size() != 1 {
        return Err(Error::input("needs a one-point R"));
    }
    // the bijection on one tensor: (f,n) ↦ (f(*), n), recursively on the left
    fn to_cart(x: &Elem, depth: usize) -> Elem {
        if depth == 0 {
            return x.clone();
        }
        let f = x.fst().table()[0].clone();
        Elem::pair(to_cart(&f, depth - 1), x.snd().clone())
    }
    for l in objs {
        for m in objs {
            for n in objs {
                let g = dot.gamma(l, m, n)?;
                let c = cart.gamma(l, m, n)?;
                for x in g.dom().elems()?.iter() {
                    // x = (f,(g,n)) with f: 1 -> L, g: 1 -> M
                    let xc = Elem::pair(x.fst().table()[0].clone(), to_cart(x.snd(), 1));
                    let y = g.apply(x);
                    // y = (h, n) with h: 1 -> L•M
                    let yc = Elem::pair(to_cart(&y.fst().table()[0], 1), y.snd().clone());
                    let want = c.apply(&xc);
                    if yc != want {
                        return Ok(Some(Witness::new(x, yc, want).with_note("gamma")));
                    }
                }
            }
        }
        let e = dot.eps(l)?;
        for x in e.dom().elems()?.iter() {
            let xc = Elem::pair(x.fst().table()[0].clone(), Elem::atom("*"));
            let want = cart.eps(l)?.apply(&xc);
            if e.apply(x) != want {
                return Ok(Some(Witness::new(x, e.apply(x), want).with_note("eps")));
            }
        }
        let h = dot.eta(l)?;
        for x in l.elems()?.iter() {
            let y = h.apply(x);
            if y.snd() != x {
                return Ok(Some(Witness::new(x, y, "-").with_note("eta")));
            }
        }
    }
    Ok(None)
}

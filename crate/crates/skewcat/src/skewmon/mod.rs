//! Skew monoidal structures (right-skew orientation), their axiom suites,
//! invertibility scans and skew monoidal functors.
//!
//! Every structure here has finite sets as carriers, so a component is a
//! `Mor` between carriers. What varies is the object type: plain sets for
//! the base structures, algebras or E-objects for the lifted ones.

pub mod set;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::backends::coeq::Coeq;
use crate::backends::finset::{hom_set, Mor, Obj};
use crate::cat::{compare, equation, Check, Outcome, Witness};
use crate::error::{Error, Result};

pub use set::{SetSkew, Shape};

/// The operations a skew monoidal structure has to provide.
pub trait SkewOps: Send + Sync {
    type O: Clone + Send + Sync;

    fn name(&self) -> String;
    fn label(&self, a: &Self::O) -> String;
    fn carrier(&self, a: &Self::O) -> Obj;
    fn unit(&self) -> Self::O;
    fn tensor(&self, a: &Self::O, b: &Self::O) -> Result<Self::O>;
    /// `f ⊛ B : A⊛B -> A2⊛B`.
    fn whisker_left(&self, f: &Mor, a: &Self::O, a2: &Self::O, b: &Self::O) -> Result<Mor>;
    /// `A ⊛ g : A⊛B -> A⊛B2`.
    fn whisker_right(&self, a: &Self::O, g: &Mor, b: &Self::O, b2: &Self::O) -> Result<Mor>;
    /// `γ_{L,M,N} : L⊛(M⊛N) -> (L⊛M)⊛N`.
    fn gamma(&self, l: &Self::O, m: &Self::O, n: &Self::O) -> Result<Mor>;
    /// `η_M : M -> R⊛M`.
    fn eta(&self, m: &Self::O) -> Result<Mor>;
    /// `ε_M : M⊛R -> M`.
    fn eps(&self, m: &Self::O) -> Result<Mor>;

    /// Whether a carrier map is a morphism of the structure's category.
    fn is_morphism(&self, _f: &Mor, _a: &Self::O, _b: &Self::O) -> Result<bool> {
        Ok(true)
    }

    fn hom(&self, a: &Self::O, b: &Self::O) -> Result<Vec<Mor>> {
        let mut out = Vec::new();
        for f in hom_set(&self.carrier(a), &self.carrier(b))? {
            if self.is_morphism(&f, a, b)? {
                out.push(f);
            }
        }
        Ok(out)
    }

    /// `T = R⊛-` on objects.
    fn t(&self, m: &Self::O) -> Result<Self::O> {
        self.tensor(&self.unit(), m)
    }

    /// `Tf`.
    fn t_mor(&self, f: &Mor, a: &Self::O, b: &Self::O) -> Result<Mor> {
        self.whisker_right(&self.unit(), f, a, b)
    }

    /// `μ_{N,M} = (ε_N⊛M)∘γ_{N,R,M} : N⊛TM -> N⊛M`.
    fn mu2(&self, n: &Self::O, m: &Self::O) -> Result<Mor> {
        let r = self.unit();
        let nr = self.tensor(n, &r)?;
        let e = self.whisker_left(&self.eps(n)?, &nr, n, m)?;
        chain(&[self.gamma(n, &r, m)?, e])
    }

    /// The monad multiplication `μ_M = μ_{R,M}`.
    fn mu(&self, m: &Self::O) -> Result<Mor> {
        self.mu2(&self.unit(), m)
    }
}

/// A structure whose category has the coequalizers the horizontal tensor
/// needs, computed as objects of the structure.
pub trait Base: SkewOps {
    /// The quotient of `tgt` by the parallel pair, with its projection.
    fn coequalize(&self, f: &Mor, g: &Mor, tgt: &Self::O, name: String) -> Result<(Self::O, Coeq)>;
}

/// Compose in diagrammatic order: `chain(&[f, g, h]) = h∘g∘f`.
pub fn chain(ms: &[Mor]) -> Result<Mor> {
    let mut it = ms.iter();
    let first = it.next().ok_or_else(|| Error::input("empty composite"))?.clone();
    it.try_fold(first, |acc, m| m.try_after(&acc))
}

fn labels<S: SkewOps>(s: &S, objs: &[S::O], idx: &[usize]) -> String {
    idx.iter().map(|&i| s.label(&objs[i])).collect::<Vec<_>>().join(",")
}

/// All `k`-tuples of indices below `n`, last position fastest.
pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let total = n.pow(k as u32);
    (0..total)
        .map(|mut c| {
            let mut t = vec![0; k];
            for slot in t.iter_mut().rev() {
                *slot = c % n;
                c /= n;
            }
            t
        })
        .collect()
}

// ---- the five axioms, as pairs of composites ----

pub fn smc1<S: SkewOps>(s: &S, k: &S::O, l: &S::O, m: &S::O, n: &S::O) -> Result<(Mor, Mor)> {
    let mn = s.tensor(m, n)?;
    let lm = s.tensor(l, m)?;
    let kl = s.tensor(k, l)?;
    let l_mn = s.tensor(l, &mn)?;
    let lm_n = s.tensor(&lm, n)?;
    let k_lm = s.tensor(k, &lm)?;
    let kl_m = s.tensor(&kl, m)?;
    let lhs = chain(&[
        s.whisker_right(k, &s.gamma(l, m, n)?, &l_mn, &lm_n)?,
        s.gamma(k, &lm, n)?,
        s.whisker_left(&s.gamma(k, l, m)?, &k_lm, &kl_m, n)?,
    ])?;
    let rhs = chain(&[s.gamma(k, l, &mn)?, s.gamma(&kl, m, n)?])?;
    Ok((lhs, rhs))
}

pub fn smc2<S: SkewOps>(s: &S, m: &S::O, n: &S::O) -> Result<(Mor, Mor)> {
    let r = s.unit();
    let mn = s.tensor(m, n)?;
    let lhs = chain(&[s.eta(&mn)?, s.gamma(&r, m, n)?])?;
    let rhs = s.whisker_left(&s.eta(m)?, m, &s.t(m)?, n)?;
    Ok((lhs, rhs))
}

pub fn smc3<S: SkewOps>(s: &S, m: &S::O, n: &S::O) -> Result<(Mor, Mor)> {
    let r = s.unit();
    let mn = s.tensor(m, n)?;
    let nr = s.tensor(n, &r)?;
    let lhs = chain(&[s.gamma(m, n, &r)?, s.eps(&mn)?])?;
    let rhs = s.whisker_right(m, &s.eps(n)?, &nr, n)?;
    Ok((lhs, rhs))
}

pub fn smc4<S: SkewOps>(s: &S, m: &S::O, n: &S::O) -> Result<(Mor, Mor)> {
    let r = s.unit();
    let tn = s.t(n)?;
    let mr = s.tensor(m, &r)?;
    let lhs = chain(&[
        s.whisker_right(m, &s.eta(n)?, n, &tn)?,
        s.gamma(m, &r, n)?,
        s.whisker_left(&s.eps(m)?, &mr, m, n)?,
    ])?;
    Ok((lhs, Mor::id(&s.carrier(&s.tensor(m, n)?))))
}

pub fn smc5<S: SkewOps>(s: &S) -> Result<(Mor, Mor)> {
    let r = s.unit();
    Ok((chain(&[s.eta(&r)?, s.eps(&r)?])?, Mor::id(&s.carrier(&r))))
}

/// The five axioms with every slot drawn from `objs`.
pub fn smc_checks<'a, S: SkewOps>(prefix: &str, s: &'a S, objs: &'a [S::O]) -> Vec<Check<'a>> {
    let mut v = actegory_checks(prefix, s, objs, objs, ["SMC1", "SMC3", "SMC4"]);
    let n = objs.len();
    let pairs = tuples(n, 2);
    let cases = pairs.iter().map(|t| labels(s, objs, t)).collect();
    v.insert(
        1,
        Check::new(format!("{prefix}.SMC2"), cases, move |i| {
            let t = &pairs[i];
            equation(|| smc2(s, &objs[t[0]], &objs[t[1]]))
        }),
    );
    v.push(Check::single(format!("{prefix}.SMC5"), s.label(&s.unit()), move || equation(|| smc5(s))));
    v
}

/// SMC1, SMC3 and SMC4 with the first slot drawn from `first` and the
/// others from `rest`: the axioms of a right actegory when `first` are
/// objects acted on.
pub fn actegory_checks<'a, S: SkewOps>(
    prefix: &str,
    s: &'a S,
    first: &'a [S::O],
    rest: &'a [S::O],
    ids: [&str; 3],
) -> Vec<Check<'a>> {
    let (nf, nr) = (first.len(), rest.len());
    let quads: Vec<[usize; 4]> = tuples(nr, 3)
        .into_iter()
        .flat_map(|t| (0..nf).map(move |k| [k, t[0], t[1], t[2]]))
        .collect();
    let mut quads = quads;
    quads.sort();
    let pairs: Vec<[usize; 2]> = (0..nf).flat_map(|m| (0..nr).map(move |n| [m, n])).collect();
    let label4 = |q: &[usize; 4]| format!("{},{}", s.label(&first[q[0]]), labels(s, rest, &q[1..]));
    let label2 = |p: &[usize; 2]| format!("{},{}", s.label(&first[p[0]]), s.label(&rest[p[1]]));
    let c1: Vec<String> = quads.iter().map(label4).collect();
    let c2: Vec<String> = pairs.iter().map(label2).collect();
    let (q1, p3, p4) = (quads.clone(), pairs.clone(), pairs);
    vec![
        Check::new(format!("{prefix}.{}", ids[0]), c1, move |i| {
            let q = q1[i];
            equation(|| smc1(s, &first[q[0]], &rest[q[1]], &rest[q[2]], &rest[q[3]]))
        }),
        Check::new(format!("{prefix}.{}", ids[1]), c2.clone(), move |i| {
            let p = p3[i];
            equation(|| smc3(s, &first[p[0]], &rest[p[1]]))
        }),
        Check::new(format!("{prefix}.{}", ids[2]), c2, move |i| {
            let p = p4[i];
            equation(|| smc4(s, &first[p[0]], &rest[p[1]]))
        }),
    ]
}

// ---- naturality and functoriality ----

fn first_failure(outs: impl IntoIterator<Item = Result<Outcome>>, note: impl Fn(usize) -> String) -> Outcome {
    for (k, o) in outs.into_iter().enumerate() {
        match o {
            Ok(Outcome::Pass) => {}
            Ok(Outcome::Fail(w)) => {
                let extra = note(k);
                let w = match w.note {
                    Some(n) => Witness { note: Some(format!("{n}; {extra}")), ..w },
                    None => w.with_note(extra),
                };
                return Outcome::Fail(w);
            }
            Ok(skip) => return skip,
            Err(e) => return Outcome::from_result(Err(e)),
        }
    }
    Outcome::Pass
}

/// Identity and interchange laws of the tensor, plus naturality of γ in
/// each slot separately, of η and of ε, over every morphism between
/// universe objects.
pub fn naturality_checks<'a, S: SkewOps>(prefix: &str, s: &'a S, objs: &'a [S::O]) -> Vec<Check<'a>> {
    let n = objs.len();
    let mut out = Vec::new();

    let pairs = tuples(n, 2);
    let cases: Vec<String> = pairs.iter().map(|t| labels(s, objs, t)).collect();
    let p = pairs.clone();
    out.push(Check::new(format!("{prefix}.tensor-identity"), cases, move |i| {
        let (a, b) = (&objs[p[i][0]], &objs[p[i][1]]);
        equation(|| {
            let ab = s.tensor(a, b)?;
            let id = Mor::id(&s.carrier(&ab));
            let l = s.whisker_left(&Mor::id(&s.carrier(a)), a, a, b)?;
            let r = s.whisker_right(a, &Mor::id(&s.carrier(b)), b, b)?;
            Ok((chain(&[l, r])?, id))
        })
    }));

    let quads = tuples(n, 4);
    let cases: Vec<String> = quads.iter().map(|t| labels(s, objs, t)).collect();
    let q = quads.clone();
    out.push(Check::new(format!("{prefix}.tensor-interchange"), cases, move |i| {
        let [a, a2, b, b2] = [&objs[q[i][0]], &objs[q[i][1]], &objs[q[i][2]], &objs[q[i][3]]];
        Outcome::from_result((|| {
            let fs = s.hom(a, a2)?;
            let gs = s.hom(b, b2)?;
            let mut res = Vec::new();
            let mut notes = Vec::new();
            for f in &fs {
                for g in &gs {
                    let l = chain(&[s.whisker_left(f, a, a2, b)?, s.whisker_right(a2, g, b, b2)?])?;
                    let r = chain(&[s.whisker_right(a, g, b, b2)?, s.whisker_left(f, a, a2, b2)?])?;
                    res.push(compare(&l, &r));
                    notes.push(format!("f = {f:?}, g = {g:?}"));
                    if !matches!(res.last(), Some(Ok(Outcome::Pass))) {
                        break;
                    }
                }
            }
            Ok(first_failure(res, |k| notes[k].clone()))
        })())
    }));

    // γ in each of its three slots
    for slot in 0..3 {
        let triples = tuples(n, 4);
        // (src, tgt, other, other)
        let cases: Vec<String> = triples.iter().map(|t| labels(s, objs, t)).collect();
        out.push(Check::new(format!("{prefix}.nat-gamma-{}", slot + 1), cases, move |i| {
            let t = &triples[i];
            let (a, a2, x, y) = (&objs[t[0]], &objs[t[1]], &objs[t[2]], &objs[t[3]]);
            Outcome::from_result((|| {
                let mut res = Vec::new();
                let fs = s.hom(a, a2)?;
                for f in &fs {
                    let o = gamma_square(s, slot, f, a, a2, x, y);
                    let stop = !matches!(o, Ok(Outcome::Pass));
                    res.push(o);
                    if stop {
                        break;
                    }
                }
                Ok(first_failure(res, |k| format!("f = {:?}", fs[k])))
            })())
        }));
    }

    let cases: Vec<String> = pairs.iter().map(|t| labels(s, objs, t)).collect();
    let p = pairs.clone();
    out.push(Check::new(format!("{prefix}.nat-eta"), cases.clone(), move |i| {
        let (a, b) = (&objs[p[i][0]], &objs[p[i][1]]);
        Outcome::from_result((|| {
            let fs = s.hom(a, b)?;
            let res: Vec<Result<Outcome>> = fs
                .iter()
                .map(|f| {
                    let l = chain(&[f.clone(), s.eta(b)?])?;
                    let r = chain(&[s.eta(a)?, s.t_mor(f, a, b)?])?;
                    compare(&l, &r)
                })
                .collect();
            Ok(first_failure(res, |k| format!("f = {:?}", fs[k])))
        })())
    }));
    let p = pairs;
    out.push(Check::new(format!("{prefix}.nat-eps"), cases, move |i| {
        let (a, b) = (&objs[p[i][0]], &objs[p[i][1]]);
        Outcome::from_result((|| {
            let fs = s.hom(a, b)?;
            let r = s.unit();
            let res: Vec<Result<Outcome>> = fs
                .iter()
                .map(|f| {
                    let l = chain(&[s.eps(a)?, f.clone()])?;
                    let rr = chain(&[s.whisker_left(f, a, b, &r)?, s.eps(b)?])?;
                    compare(&l, &rr)
                })
                .collect();
            Ok(first_failure(res, |k| format!("f = {:?}", fs[k])))
        })())
    }));
    out
}

fn gamma_square<S: SkewOps>(s: &S, slot: usize, f: &Mor, a: &S::O, a2: &S::O, x: &S::O, y: &S::O) -> Result<Outcome> {
    // f: a -> a2 sits in position `slot`; x, y fill the other two in order.
    let (l, m, n, l2, m2, n2) = match slot {
        0 => (a, x, y, a2, x, y),
        1 => (x, a, y, x, a2, y),
        _ => (x, y, a, x, y, a2),
    };
    let mn = s.tensor(m, n)?;
    let m2n2 = s.tensor(m2, n2)?;
    let lm = s.tensor(l, m)?;
    let l2m2 = s.tensor(l2, m2)?;
    // f acting on L⊛(M⊛N) and on (L⊛M)⊛N
    let (before, after) = match slot {
        0 => (
            s.whisker_left(f, l, l2, &mn)?,
            s.whisker_left(&s.whisker_left(f, l, l2, m)?, &lm, &l2m2, n)?,
        ),
        1 => (
            s.whisker_right(l, &s.whisker_left(f, m, m2, n)?, &mn, &m2n2)?,
            s.whisker_left(&s.whisker_right(l, f, m, m2)?, &lm, &l2m2, n)?,
        ),
        _ => (
            s.whisker_right(l, &s.whisker_right(m, f, n, n2)?, &mn, &m2n2)?,
            s.whisker_right(&lm, f, n, n2)?,
        ),
    };
    let lhs = chain(&[before, s.gamma(l2, m2, n2)?])?;
    let rhs = chain(&[s.gamma(l, m, n)?, after])?;
    compare(&lhs, &rhs)
}

// ---- invertibility ----

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Class {
    Iso,
    MonicNotEpic,
    EpicNotMonic,
    Neither,
    Skipped,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Class::Iso => "iso",
            Class::MonicNotEpic => "monic-not-epic",
            Class::EpicNotMonic => "epic-not-monic",
            Class::Neither => "neither",
            Class::Skipped => "skipped",
        };
        f.write_str(s)
    }
}

/// Classify a map of finite sets, with a witness for each failure: two
/// inputs with the same image, or a point outside the image.
pub fn classify(m: &Mor) -> Result<(Class, Option<Witness>)> {
    let coll = m.collision()?;
    let miss = m.missed()?;
    let w = match (&coll, &miss) {
        (Some((x, y, z)), _) => Some(Witness::new(format!("{x} ~ {y}"), z, z).with_note("not injective")),
        (None, Some(y)) => Some(Witness::new(y, "-", "-").with_note("not surjective")),
        _ => None,
    };
    let class = match (coll.is_none(), miss.is_none()) {
        (true, true) => Class::Iso,
        (true, false) => Class::MonicNotEpic,
        (false, true) => Class::EpicNotMonic,
        (false, false) => Class::Neither,
    };
    Ok((class, w))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanEntry {
    pub family: String,
    pub at: Vec<String>,
    pub class: Class,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Classification of every γ, η and ε component over a universe.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Scan {
    pub structure: String,
    pub entries: Vec<ScanEntry>,
}

impl Scan {
    pub fn all_iso(&self) -> bool {
        self.entries.iter().all(|e| e.class == Class::Iso)
    }

    pub fn family_iso(&self, family: &str) -> bool {
        self.entries.iter().filter(|e| e.family == family).all(|e| e.class == Class::Iso)
    }

    pub fn find(&self, family: &str, pred: impl Fn(&ScanEntry) -> bool) -> Option<&ScanEntry> {
        self.entries.iter().find(|e| e.family == family && pred(e))
    }

    pub fn count(&self, family: &str, class: Class) -> usize {
        self.entries.iter().filter(|e| e.family == family && e.class == class).count()
    }
}

fn scan_entry(family: &str, at: Vec<String>, m: Result<Mor>) -> ScanEntry {
    match m.and_then(|m| classify(&m)) {
        Ok((class, witness)) => ScanEntry {
            family: family.to_string(),
            at,
            class,
            witness,
        },
        Err(e) => ScanEntry {
            family: family.to_string(),
            at,
            class: Class::Skipped,
            witness: Some(Witness::new("-", "-", "-").with_note(e.to_string())),
        },
    }
}

pub fn scan<S: SkewOps>(s: &S, objs: &[S::O]) -> Scan {
    use rayon::prelude::*;
    let n = objs.len();
    let mut entries: Vec<ScanEntry> = tuples(n, 3)
        .par_iter()
        .map(|t| {
            let at = t.iter().map(|&i| s.label(&objs[i])).collect();
            scan_entry("gamma", at, s.gamma(&objs[t[0]], &objs[t[1]], &objs[t[2]]))
        })
        .collect();
    for o in objs {
        entries.push(scan_entry("eta", vec![s.label(o)], s.eta(o)));
    }
    for o in objs {
        entries.push(scan_entry("eps", vec![s.label(o)], s.eps(o)));
    }
    Scan {
        structure: s.name(),
        entries,
    }
}

// ---- skew monoidal functors ----

/// A skew monoidal functor `F : S -> T` with `F₂ : FA⊛'FB -> F(A⊛B)` and
/// `F₀ : R' -> FR`.
pub trait SkewFunctor: Send + Sync {
    type S: SkewOps;
    type T: SkewOps;

    fn name(&self) -> String;
    fn src(&self) -> &Self::S;
    fn tgt(&self) -> &Self::T;
    fn obj(&self, a: &<Self::S as SkewOps>::O) -> Result<<Self::T as SkewOps>::O>;
    /// `Ff : FA -> FB` for `f : A -> B`.
    fn fmap(&self, f: &Mor, a: &<Self::S as SkewOps>::O, b: &<Self::S as SkewOps>::O) -> Result<Mor>;
    fn f2(&self, a: &<Self::S as SkewOps>::O, b: &<Self::S as SkewOps>::O) -> Result<Mor>;
    fn f0(&self) -> Result<Mor>;
}

pub fn functor_assoc<F: SkewFunctor>(
    f: &F,
    a: &<F::S as SkewOps>::O,
    b: &<F::S as SkewOps>::O,
    c: &<F::S as SkewOps>::O,
) -> Result<(Mor, Mor)> {
    let (s, t) = (f.src(), f.tgt());
    let (fa, fb, fc) = (f.obj(a)?, f.obj(b)?, f.obj(c)?);
    let bc = s.tensor(b, c)?;
    let ab = s.tensor(a, b)?;
    let fbc = f.obj(&bc)?;
    let fab = f.obj(&ab)?;
    let fb_fc = t.tensor(&fb, &fc)?;
    let fa_fb = t.tensor(&fa, &fb)?;
    let a_bc = s.tensor(a, &bc)?;
    let ab_c = s.tensor(&ab, c)?;
    let lhs = chain(&[
        t.whisker_right(&fa, &f.f2(b, c)?, &fb_fc, &fbc)?,
        f.f2(a, &bc)?,
        f.fmap(&s.gamma(a, b, c)?, &a_bc, &ab_c)?,
    ])?;
    let rhs = chain(&[
        t.gamma(&fa, &fb, &fc)?,
        t.whisker_left(&f.f2(a, b)?, &fa_fb, &fab, &fc)?,
        f.f2(&ab, c)?,
    ])?;
    Ok((lhs, rhs))
}

pub fn functor_unit<F: SkewFunctor>(f: &F, a: &<F::S as SkewOps>::O) -> Result<(Mor, Mor)> {
    let (s, t) = (f.src(), f.tgt());
    let fa = f.obj(a)?;
    let r = s.unit();
    let fr = f.obj(&r)?;
    let ta = s.t(a)?;
    let lhs = f.fmap(&s.eta(a)?, a, &ta)?;
    let rhs = chain(&[t.eta(&fa)?, t.whisker_left(&f.f0()?, &t.unit(), &fr, &fa)?, f.f2(&r, a)?])?;
    Ok((lhs, rhs))
}

pub fn functor_counit<F: SkewFunctor>(f: &F, a: &<F::S as SkewOps>::O) -> Result<(Mor, Mor)> {
    let (s, t) = (f.src(), f.tgt());
    let fa = f.obj(a)?;
    let r = s.unit();
    let fr = f.obj(&r)?;
    let ar = s.tensor(a, &r)?;
    let lhs = t.eps(&fa)?;
    let rhs = chain(&[
        t.whisker_right(&fa, &f.f0()?, &t.unit(), &fr)?,
        f.f2(a, &r)?,
        f.fmap(&s.eps(a)?, &ar, a)?,
    ])?;
    Ok((lhs, rhs))
}

/// The three skew monoidal functor equations over a universe.
pub fn functor_checks<'a, F: SkewFunctor>(prefix: &str, f: &'a F, objs: &'a [<F::S as SkewOps>::O]) -> Vec<Check<'a>> {
    let s = f.src();
    let n = objs.len();
    let triples = tuples(n, 3);
    let cases: Vec<String> = triples.iter().map(|t| labels(s, objs, t)).collect();
    let singles: Vec<String> = objs.iter().map(|o| s.label(o)).collect();
    vec![
        Check::new(format!("{prefix}.assoc"), cases, move |i| {
            let t = &triples[i];
            equation(|| functor_assoc(f, &objs[t[0]], &objs[t[1]], &objs[t[2]]))
        }),
        Check::new(format!("{prefix}.unit"), singles.clone(), move |i| equation(|| functor_unit(f, &objs[i]))),
        Check::new(format!("{prefix}.counit"), singles, move |i| equation(|| functor_counit(f, &objs[i]))),
    ]
}

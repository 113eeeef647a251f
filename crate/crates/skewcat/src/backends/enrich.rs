//! The self-enrichment of each backend rebuilt from its copower adjunction:
//! composition and identities reconstructed from `ev`, `coev` and the hom
//! strength `chi`, compared against the backend's own.

use super::finset::{compose_fun, eval_fun, id_fun, Elem, Mor, Obj};
use super::finvec::{FinVec, Mat, Space};
use crate::cat::{compare, Check, Outcome, Witness};
use crate::error::Result;

/// Corrupt one value of `ev_{M,N}`.
#[derive(Clone, Debug)]
pub struct EvPatch {
    pub m: Obj,
    pub n: Obj,
    pub input: Elem,
    pub output: Elem,
}

/// Hom, copower and adjunction data for finite sets.
#[derive(Clone, Default)]
pub struct SetEnrichment {
    pub patch: Option<EvPatch>,
}

impl SetEnrichment {
    /// `ev_{M,N}: [M,N] x M -> N`.
    pub fn ev(&self, m: &Obj, n: &Obj) -> Mor {
        let h = Obj::hom(m, n);
        let m2 = m.clone();
        let ev = Mor::new(&Obj::product(&h, m), n, move |x| eval_fun(&m2, x.fst(), x.snd()));
        match &self.patch {
            Some(p) if p.m.same(m) && p.n.same(n) => ev.patched(p.input.clone(), p.output.clone()),
            _ => ev,
        }
    }

    /// `coev_{M,V}: V -> [M, V x M]`.
    pub fn coev(&self, m: &Obj, v: &Obj) -> Result<Mor> {
        let ms = m.elems()?;
        Ok(Mor::new(v, &Obj::hom(m, &Obj::product(v, m)), move |x| {
            Elem::fun(ms.iter().map(|y| Elem::pair(x.clone(), y.clone())).collect())
        }))
    }

    /// `[M, h]`, postcomposition.
    pub fn hom_post(&self, m: &Obj, h: &Mor) -> Mor {
        let h2 = h.clone();
        Mor::new(&Obj::hom(m, h.dom()), &Obj::hom(m, h.cod()), move |f| super::finset::post_fun(&h2, f))
    }

    /// `V x h`.
    pub fn copower_mor(&self, v: &Obj, h: &Mor) -> Mor {
        super::finset::product_mor(&Mor::id(v), h)
    }

    /// `a_{U,V,M}: U x (V x M) -> (U x V) x M`.
    pub fn assoc(&self, u: &Obj, v: &Obj, m: &Obj) -> Mor {
        let dom = Obj::product(u, &Obj::product(v, m));
        let cod = Obj::product(&Obj::product(u, v), m);
        Mor::new(&dom, &cod, |x| {
            Elem::pair(Elem::pair(x.fst().clone(), x.snd().fst().clone()), x.snd().snd().clone())
        })
    }

    pub fn assoc_inv(&self, u: &Obj, v: &Obj, m: &Obj) -> Mor {
        let dom = Obj::product(&Obj::product(u, v), m);
        let cod = Obj::product(u, &Obj::product(v, m));
        Mor::new(&dom, &cod, |x| {
            Elem::pair(x.fst().fst().clone(), Elem::pair(x.fst().snd().clone(), x.snd().clone()))
        })
    }

    /// `chi_{V,M,N} = [M, V x ev] ∘ [M, a^{-1}] ∘ coev_{M, V x [M,N]}`.
    pub fn chi(&self, v: &Obj, m: &Obj, n: &Obj) -> Result<Mor> {
        let h = Obj::hom(m, n);
        let vh = Obj::product(v, &h);
        let coev = self.coev(m, &vh)?;
        let reassoc = self.hom_post(m, &self.assoc_inv(v, &h, m));
        let apply = self.hom_post(m, &self.copower_mor(v, &self.ev(m, n)));
        Ok(apply.after(&reassoc.retype(coev.cod(), reassoc.cod())).after(&coev))
    }

    /// `c_{L,M,N} = [L, ev_{M,N}] ∘ chi_{[M,N],L,M}`.
    pub fn composition(&self, l: &Obj, m: &Obj, n: &Obj) -> Result<Mor> {
        let chi = self.chi(&Obj::hom(m, n), l, m)?;
        let post = self.hom_post(l, &self.ev(m, n));
        Ok(post.retype(chi.cod(), post.cod()).after(&chi))
    }

    /// `i_M = [M, l^{-1}] ∘ coev_{M,I}` with `I = 1`.
    pub fn unit(&self, m: &Obj) -> Result<Mor> {
        let i = Obj::point();
        let coev = self.coev(m, &i)?;
        let unl = Mor::new(&Obj::product(&i, m), m, |x| x.snd().clone());
        let post = self.hom_post(m, &unl);
        Ok(post.retype(coev.cod(), post.cod()).after(&coev))
    }
}

fn triples<T: Clone>(objs: &[T]) -> Vec<(T, T, T)> {
    let mut out = Vec::new();
    for a in objs {
        for b in objs {
            for c in objs {
                out.push((a.clone(), b.clone(), c.clone()));
            }
        }
    }
    out
}

/// The enrichment identities over a universe of finite sets: composition
/// and units rebuilt from `ev`/`coev`, and V-naturality of `ev` and `coev`.
pub fn check_set_enrichment<'a>(en: &'a SetEnrichment, objs: &'a [Obj]) -> Vec<Check<'a>> {
    let ts = triples(objs);
    let labels: Vec<String> = ts.iter().map(|(a, b, c)| format!("{a},{b},{c}")).collect();
    let ts1 = ts.clone();
    let comp = Check::new("enrich.composition", labels.clone(), move |i| {
        let (l, m, n) = &ts1[i];
        Outcome::from_result((|| {
            let c = en.composition(l, m, n)?;
            let (hmn, hlm) = (Obj::hom(m, n), Obj::hom(l, m));
            let m2 = m.clone();
            let direct = Mor::new(&Obj::product(&hmn, &hlm), &Obj::hom(l, n), move |x| compose_fun(&m2, x.fst(), x.snd()));
            compare(&c, &direct)
        })())
    });
    let unit = Check::new("enrich.unit", objs.iter().map(|o| o.to_string()).collect(), move |i| {
        let m = &objs[i];
        Outcome::from_result((|| {
            let u = en.unit(m)?;
            let id = id_fun(m)?;
            let direct = Mor::new(u.dom(), u.cod(), move |_| id.clone());
            compare(&u, &direct)
        })())
    });
    let ts2 = ts.clone();
    let ev_nat = Check::new("enrich.ev-naturality", labels.clone(), move |i| {
        let (v, m, n) = &ts2[i];
        Outcome::from_result((|| {
            // V x ev_{M,N} = ev_{M,VxN} ∘ (chi x M) ∘ a
            let h = Obj::hom(m, n);
            let lhs = en.copower_mor(v, &en.ev(m, n));
            let a = en.assoc(v, &h, m);
            let chi_m = super::finset::product_mor(&en.chi(v, m, n)?, &Mor::id(m));
            let ev = en.ev(m, &Obj::product(v, n));
            let rhs = ev.after(&chi_m.retype(a.cod(), ev.dom())).after(&a);
            compare(&lhs, &rhs.retype(lhs.dom(), lhs.cod()))
        })())
    });
    let ts3 = ts;
    let coev_nat = Check::new("enrich.coev-naturality", labels, move |i| {
        let (u, v, m) = &ts3[i];
        Outcome::from_result((|| {
            // coev_{M,UxV} = [M, a] ∘ chi_{U,M,VxM} ∘ (U x coev_{M,V})
            let lhs = en.coev(m, &Obj::product(u, v))?;
            let first = en.copower_mor(u, &en.coev(m, v)?);
            let chi = en.chi(u, m, &Obj::product(v, m))?;
            let post = en.hom_post(m, &en.assoc(u, v, m));
            let rhs = post.after(&chi.after(&first.retype(lhs.dom(), chi.dom())));
            compare(&lhs, &rhs.retype(lhs.dom(), lhs.cod()))
        })())
    });
    vec![comp, unit, ev_nat, coev_nat]
}

/// The same data for `F_p`-spaces, as matrices. Hom spaces are row-major
/// vectorized matrices and tensor products use Kronecker order, which makes
/// the associator an identity matrix.
#[derive(Clone)]
pub struct VecEnrichment {
    pub fv: FinVec,
    /// Toggle one entry `(row, col)` of `ev_{M,N}` at the given dims.
    pub patch: Option<(usize, usize, usize, usize)>,
}

impl VecEnrichment {
    pub fn ev(&self, m: usize, n: usize) -> Mat {
        let mut e = Mat::zeros(self.fv.p, n, n * m * m);
        for i in 0..n {
            for j in 0..m {
                e.set(i, (i * m + j) * m + j, 1);
            }
        }
        if let Some((pm, pn, r, c)) = self.patch {
            if (pm, pn) == (m, n) && r < e.rows && c < e.cols {
                e.set(r, c, e.get(r, c) + 1);
            }
        }
        e
    }

    pub fn coev(&self, m: usize, v: usize) -> Mat {
        let mut c = Mat::zeros(self.fv.p, v * m * m, v);
        for a in 0..v {
            for k in 0..m {
                c.set((a * m + k) * m + k, a, 1);
            }
        }
        c
    }

    pub fn hom_post(&self, m: usize, h: &Mat) -> Mat {
        h.kron(&Mat::identity(self.fv.p, m))
    }

    pub fn chi(&self, v: usize, m: usize, n: usize) -> Result<Mat> {
        let coev = self.coev(m, v * n * m);
        let apply = self.hom_post(m, &Mat::identity(self.fv.p, v).kron(&self.ev(m, n)));
        apply.mul(&coev)
    }

    pub fn composition(&self, l: usize, m: usize, n: usize) -> Result<Mat> {
        let chi = self.chi(n * m, l, m)?;
        self.hom_post(l, &self.ev(m, n)).mul(&chi)
    }

    pub fn unit(&self, m: usize) -> Mat {
        self.coev(m, 1)
    }
}

fn mat_outcome(lhs: &Mat, rhs: &Mat) -> Outcome {
    if (lhs.rows, lhs.cols) != (rhs.rows, rhs.cols) {
        return Outcome::Fail(Witness::new("-", format!("{lhs:?}"), format!("{rhs:?}")).with_note("shape mismatch"));
    }
    for j in 0..lhs.cols {
        let mut e = vec![0u32; lhs.cols];
        e[j] = 1;
        let (a, b) = (lhs.apply(&e), rhs.apply(&e));
        if a != b {
            return Outcome::Fail(Witness::new(format!("{e:?}"), format!("{a:?}"), format!("{b:?}")));
        }
    }
    Outcome::Pass
}

fn vec_of(m: &Mat) -> Vec<u32> {
    m.entries().to_vec()
}

pub fn check_vec_enrichment<'a>(en: &'a VecEnrichment, dims: &'a [Space]) -> Vec<Check<'a>> {
    let ds: Vec<usize> = dims.iter().map(|d| d.0).collect();
    let ts = triples(&ds);
    let labels: Vec<String> = ts.iter().map(|(a, b, c)| format!("dim{a},dim{b},dim{c}")).collect();
    let p = en.fv.p;
    let ts1 = ts.clone();
    let comp = Check::new("enrich.composition", labels.clone(), move |i| {
        let (l, m, n) = ts1[i];
        Outcome::from_result((|| {
            let c = en.composition(l, m, n)?;
            // columns indexed by basis pairs (E_ij in [M,N]) x (E_kl in [L,M])
            let mut direct = Mat::zeros(p, n * l, n * m * m * l);
            for g in 0..n * m {
                for f in 0..m * l {
                    let mut gm = Mat::zeros(p, n, m);
                    gm.set(g / m, g % m, 1);
                    let mut fm = Mat::zeros(p, m, l);
                    fm.set(f / l, f % l, 1);
                    for (r, x) in vec_of(&gm.mul(&fm)?).into_iter().enumerate() {
                        direct.set(r, g * m * l + f, x);
                    }
                }
            }
            Ok(mat_outcome(&c, &direct))
        })())
    });
    let units: Vec<usize> = ds.clone();
    let unit = Check::new("enrich.unit", units.iter().map(|d| format!("dim{d}")).collect(), move |i| {
        let m = units[i];
        let mut direct = Mat::zeros(p, m * m, 1);
        for (r, x) in vec_of(&Mat::identity(p, m)).into_iter().enumerate() {
            direct.set(r, 0, x);
        }
        mat_outcome(&en.unit(m), &direct)
    });
    let ts2 = ts.clone();
    let ev_nat = Check::new("enrich.ev-naturality", labels.clone(), move |i| {
        let (v, m, n) = ts2[i];
        Outcome::from_result((|| {
            let lhs = Mat::identity(p, v).kron(&en.ev(m, n));
            let rhs = en.ev(m, v * n).mul(&en.chi(v, m, n)?.kron(&Mat::identity(p, m)))?;
            Ok(mat_outcome(&lhs, &rhs))
        })())
    });
    let coev_nat = Check::new("enrich.coev-naturality", labels, move |i| {
        let (u, v, m) = ts[i];
        Outcome::from_result((|| {
            let lhs = en.coev(m, u * v);
            let rhs = en.chi(u, m, v * m)?.mul(&Mat::identity(p, u).kron(&en.coev(m, v)))?;
            Ok(mat_outcome(&lhs, &rhs))
        })())
    });
    vec![comp, unit, ev_nat, coev_nat]
}

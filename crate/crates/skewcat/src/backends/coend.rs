//! Small finite categories, set-valued functors on them, and coends
//! computed as a single coequalizer into a tagged sum.

use std::collections::HashMap;

use super::coeq::Coeq;
use super::finset::{Elem, Mor, Obj};
use super::finvec::{FinVec, Mat, Space, VecCoeq};
use crate::cat::Witness;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub dom: usize,
    pub cod: usize,
}

/// A finite category given by explicit tables.
#[derive(Debug, Clone)]
pub struct SmallCategory {
    pub name: String,
    pub objects: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub identities: Vec<usize>,
    comp: HashMap<(usize, usize), usize>,
}

impl SmallCategory {
    /// `comp` maps `(g, f)` to `g ∘ f` for every composable pair.
    pub fn new(
        name: impl Into<String>,
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<usize>,
        comp: HashMap<(usize, usize), usize>,
    ) -> Result<SmallCategory> {
        let c = SmallCategory {
            name: name.into(),
            objects,
            arrows,
            identities,
            comp,
        };
        if c.identities.len() != c.objects.len() {
            return Err(Error::input(format!("{}: one identity per object is required", c.name)));
        }
        if let Some(w) = c.law_violation() {
            return Err(Error::input(format!(
                "{} is not a category: {} at {} ({} vs {})",
                c.name,
                w.note.unwrap_or_default(),
                w.input,
                w.lhs,
                w.rhs
            )));
        }
        Ok(c)
    }

    /// The category with one object and one arrow.
    pub fn trivial() -> SmallCategory {
        SmallCategory::monoid("1", vec!["id".into()], 0, |_, _| 0).expect("the trivial monoid is a monoid")
    }

    /// The walking arrow `0 -> 1`.
    pub fn walking_arrow() -> SmallCategory {
        let arrows = vec![
            Arrow { name: "id0".into(), dom: 0, cod: 0 },
            Arrow { name: "id1".into(), dom: 1, cod: 1 },
            Arrow { name: "u".into(), dom: 0, cod: 1 },
        ];
        let comp = HashMap::from([((0, 0), 0), ((1, 1), 1), ((2, 0), 2), ((1, 2), 2)]);
        SmallCategory::new("arrow", vec!["0".into(), "1".into()], arrows, vec![0, 1], comp)
            .expect("the walking arrow is a category")
    }

    /// A one-object category from a monoid; `mul(g, f)` is `g ∘ f`.
    pub fn monoid(name: impl Into<String>, elems: Vec<String>, unit: usize, mul: impl Fn(usize, usize) -> usize) -> Result<SmallCategory> {
        let n = elems.len();
        let arrows = elems.into_iter().map(|name| Arrow { name, dom: 0, cod: 0 }).collect();
        let mut comp = HashMap::new();
        for g in 0..n {
            for f in 0..n {
                comp.insert((g, f), mul(g, f));
            }
        }
        SmallCategory::new(name, vec!["*".into()], arrows, vec![unit], comp)
    }

    /// The endomorphism monoid of a finite set, as a one-object category.
    pub fn endomorphisms(r: &Obj) -> Result<SmallCategory> {
        let h = Obj::hom(r, r);
        let elems = h.elems()?;
        let id = super::finset::id_fun(r)?;
        let unit = h.index_of(&id).expect("identity is an endomorphism");
        let names = elems.iter().map(|e| e.to_string()).collect();
        SmallCategory::monoid(format!("End({r})"), names, unit, |g, f| {
            let gf = super::finset::compose_fun(r, &elems[g], &elems[f]);
            h.index_of(&gf).expect("composite of endomorphisms")
        })
    }

    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.comp.get(&(g, f)).copied()
    }

    pub fn arrows_between(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&i| self.arrows[i].dom == a && self.arrows[i].cod == b).collect()
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// First failure of the category laws, checked exhaustively.
    pub fn law_violation(&self) -> Option<Witness> {
        for (o, &i) in self.identities.iter().enumerate() {
            let a = self.arrows.get(i)?;
            if a.dom != o || a.cod != o {
                return Some(Witness::new(&self.objects[o], &a.name, "-").with_note("identity has the wrong type"));
            }
        }
        let n = self.arrows.len();
        for f in 0..n {
            for g in 0..n {
                let composable = self.arrows[f].cod == self.arrows[g].dom;
                match (composable, self.compose(g, f)) {
                    (true, None) => {
                        return Some(Witness::new(format!("{},{}", self.arrows[g].name, self.arrows[f].name), "-", "-").with_note("composite missing"))
                    }
                    (true, Some(h)) => {
                        let a = &self.arrows[h];
                        if a.dom != self.arrows[f].dom || a.cod != self.arrows[g].cod {
                            return Some(Witness::new(format!("{},{}", self.arrows[g].name, self.arrows[f].name), &a.name, "-").with_note("composite has the wrong type"));
                        }
                    }
                    (false, Some(_)) => {
                        return Some(Witness::new(format!("{},{}", self.arrows[g].name, self.arrows[f].name), "-", "-").with_note("composite of non-composable arrows"))
                    }
                    (false, None) => {}
                }
            }
        }
        for f in 0..n {
            let (d, c) = (self.arrows[f].dom, self.arrows[f].cod);
            let l = self.compose(self.identities[c], f);
            let r = self.compose(f, self.identities[d]);
            if l != Some(f) || r != Some(f) {
                return Some(Witness::new(&self.arrows[f].name, format!("{l:?}"), format!("{r:?}")).with_note("unit law"));
            }
        }
        for f in 0..n {
            for g in 0..n {
                if self.arrows[g].dom != self.arrows[f].cod {
                    continue;
                }
                for h in 0..n {
                    if self.arrows[h].dom != self.arrows[g].cod {
                        continue;
                    }
                    let l = self.compose(h, self.compose(g, f)?);
                    let r = self.compose(self.compose(h, g)?, f);
                    if l != r {
                        let names = format!("{},{},{}", self.arrows[h].name, self.arrows[g].name, self.arrows[f].name);
                        return Some(Witness::new(names, format!("{l:?}"), format!("{r:?}")).with_note("associativity"));
                    }
                }
            }
        }
        None
    }
}

/// A functor from a small category to finite sets. Covariant functors send
/// `f: a -> b` to `F a -> F b`; presheaves send it to `F b -> F a`.
#[derive(Clone)]
pub struct SetFunctor {
    pub name: String,
    pub values: Vec<Obj>,
    pub arrows: Vec<Mor>,
    pub contravariant: bool,
}

impl SetFunctor {
    pub fn covariant(name: impl Into<String>, values: Vec<Obj>, arrows: Vec<Mor>) -> SetFunctor {
        SetFunctor {
            name: name.into(),
            values,
            arrows,
            contravariant: false,
        }
    }

    pub fn presheaf(name: impl Into<String>, values: Vec<Obj>, arrows: Vec<Mor>) -> SetFunctor {
        SetFunctor {
            name: name.into(),
            values,
            arrows,
            contravariant: true,
        }
    }

    /// `C(-, c)`: arrows into `c`, acting by precomposition.
    pub fn representable(cat: &SmallCategory, c: usize) -> SetFunctor {
        let values: Vec<Obj> = (0..cat.objects.len())
            .map(|d| {
                let names: Vec<&str> = cat.arrows_between(d, c).into_iter().map(|i| cat.arrows[i].name.as_str()).collect();
                Obj::atoms(format!("C({},{})", cat.objects[d], cat.objects[c]), &names)
            })
            .collect();
        let arrows = cat
            .arrows
            .iter()
            .enumerate()
            .map(|(f, a)| {
                let cat2 = cat.clone();
                Mor::new(&values[a.cod], &values[a.dom], move |g| {
                    let gi = cat2.arrow_index(&g.to_string()).expect("arrow label");
                    Elem::atom(&cat2.arrows[cat2.compose(gi, f).expect("composable")].name)
                })
            })
            .collect();
        SetFunctor::presheaf(format!("Y{}", cat.objects[c]), values, arrows)
    }

    /// `C(c, -)`: arrows out of `c`, acting by postcomposition.
    pub fn corepresentable(cat: &SmallCategory, c: usize) -> SetFunctor {
        let values: Vec<Obj> = (0..cat.objects.len())
            .map(|d| {
                let names: Vec<&str> = cat.arrows_between(c, d).into_iter().map(|i| cat.arrows[i].name.as_str()).collect();
                Obj::atoms(format!("C({},{})", cat.objects[c], cat.objects[d]), &names)
            })
            .collect();
        let arrows = cat
            .arrows
            .iter()
            .enumerate()
            .map(|(f, a)| {
                let cat2 = cat.clone();
                Mor::new(&values[a.dom], &values[a.cod], move |g| {
                    let gi = cat2.arrow_index(&g.to_string()).expect("arrow label");
                    Elem::atom(&cat2.arrows[cat2.compose(f, gi).expect("composable")].name)
                })
            })
            .collect();
        SetFunctor::covariant(format!("Y^{}", cat.objects[c]), values, arrows)
    }

    /// The functor constant at a set.
    pub fn constant(cat: &SmallCategory, x: &Obj, contravariant: bool) -> SetFunctor {
        SetFunctor {
            name: format!("const {x}"),
            values: vec![x.clone(); cat.objects.len()],
            arrows: vec![Mor::id(x); cat.arrows.len()],
            contravariant,
        }
    }

    /// Types of every arrow image, identities, and composites.
    pub fn law_violation(&self, cat: &SmallCategory) -> Result<Option<Witness>> {
        if self.values.len() != cat.objects.len() || self.arrows.len() != cat.arrows.len() {
            return Err(Error::input(format!("{}: wrong number of values or arrows", self.name)));
        }
        for (i, a) in cat.arrows.iter().enumerate() {
            let (s, t) = if self.contravariant { (a.cod, a.dom) } else { (a.dom, a.cod) };
            let m = &self.arrows[i];
            if !m.dom().same(&self.values[s]) || !m.cod().same(&self.values[t]) {
                return Ok(Some(Witness::new(&a.name, format!("{} -> {}", m.dom(), m.cod()), format!("{} -> {}", self.values[s], self.values[t])).with_note("arrow image has the wrong type")));
            }
            if let Some((x, y)) = m.first_stray()? {
                return Ok(Some(Witness::new(x, y, "-").with_note(format!("image of {} leaves its codomain", a.name))));
            }
        }
        for (o, &i) in cat.identities.iter().enumerate() {
            if let Some((x, a, b)) = self.arrows[i].first_difference(&Mor::id(&self.values[o]))? {
                return Ok(Some(Witness::new(x, a, b).with_note(format!("identity of {} not preserved", cat.objects[o]))));
            }
        }
        for f in 0..cat.arrows.len() {
            for g in 0..cat.arrows.len() {
                let Some(gf) = cat.compose(g, f) else { continue };
                let rhs = if self.contravariant {
                    self.arrows[f].after(&self.arrows[g])
                } else {
                    self.arrows[g].after(&self.arrows[f])
                };
                if let Some((x, a, b)) = self.arrows[gf].first_difference(&rhs)? {
                    return Ok(Some(Witness::new(x, a, b).with_note(format!("composite {} o {} not preserved", cat.arrows[g].name, cat.arrows[f].name))));
                }
            }
        }
        Ok(None)
    }
}

/// A coend `∫^c H(c, c)` with its tagged-sum presentation.
pub struct Coend {
    /// `⊔_c H(c, c)`, elements `(c, x)` tagged by object name.
    pub sum: Obj,
    pub coeq: Coeq,
}

impl Coend {
    pub fn obj(&self) -> &Obj {
        &self.coeq.obj
    }

    /// The class of `x ∈ H(c, c)`.
    pub fn class(&self, cat: &SmallCategory, c: usize, x: &Elem) -> Elem {
        self.coeq.proj.apply(&Elem::pair(Elem::atom(&cat.objects[c]), x.clone()))
    }
}

/// `∫^c H(c, c)` for `H: C^op x C -> Set`, given by its values, its
/// contravariant action `left(f, d): H(b, d) -> H(a, d)` and covariant
/// action `right(c, f): H(c, a) -> H(c, b)` for `f: a -> b`.
pub fn coend(
    cat: &SmallCategory,
    value: &dyn Fn(usize, usize) -> Obj,
    left: &dyn Fn(usize, usize) -> Mor,
    right: &dyn Fn(usize, usize) -> Mor,
    name: impl Into<String>,
) -> Result<Coend> {
    let n = cat.objects.len();
    let sum = Obj::sum("sum", (0..n).map(|c| (Elem::atom(&cat.objects[c]), value(c, c))).collect());
    let fork = Obj::sum(
        "fork",
        cat.arrows
            .iter()
            .map(|a| (Elem::atom(&a.name), value(a.cod, a.dom)))
            .collect(),
    );
    // (f: a -> b, x ∈ H(b, a)) goes to H(a, a) on one leg and H(b, b) on the other
    let mut lefts = Vec::new();
    let mut rights = Vec::new();
    for (i, a) in cat.arrows.iter().enumerate() {
        lefts.push(left(i, a.dom));
        rights.push(right(a.cod, i));
    }
    let objs = cat.objects.clone();
    let arrow_names: Vec<String> = cat.arrows.iter().map(|a| a.name.clone()).collect();
    let doms: Vec<usize> = cat.arrows.iter().map(|a| a.dom).collect();
    let cods: Vec<usize> = cat.arrows.iter().map(|a| a.cod).collect();
    let index: HashMap<String, usize> = arrow_names.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let (idx1, objs1) = (index.clone(), objs.clone());
    let f1 = Mor::new(&fork, &sum, move |e| {
        let i = idx1[&e.fst().to_string()];
        Elem::pair(Elem::atom(&objs1[doms[i]]), lefts[i].apply(e.snd()))
    });
    let f2 = Mor::new(&fork, &sum, move |e| {
        let i = index[&e.fst().to_string()];
        Elem::pair(Elem::atom(&objs[cods[i]]), rights[i].apply(e.snd()))
    });
    let coeq = Coeq::of(&f1, &f2, name)?;
    Ok(Coend { sum, coeq })
}

/// The weighted colimit `U ⋆ F = ∫^c U c x F c` of a covariant `F` weighted
/// by a presheaf `U`.
pub fn weighted_colimit(cat: &SmallCategory, u: &SetFunctor, f: &SetFunctor) -> Result<Coend> {
    if !u.contravariant || f.contravariant {
        return Err(Error::input("weighted colimit needs a presheaf weight and a covariant diagram"));
    }
    let value = |c: usize, d: usize| Obj::product(&u.values[c], &f.values[d]);
    let left = |i: usize, d: usize| {
        let a = &cat.arrows[i];
        let m = u.arrows[i].clone();
        Mor::new(&value(a.cod, d), &value(a.dom, d), move |x| Elem::pair(m.apply(x.fst()), x.snd().clone()))
    };
    let right = |c: usize, i: usize| {
        let a = &cat.arrows[i];
        let m = f.arrows[i].clone();
        Mor::new(&value(c, a.dom), &value(c, a.cod), move |x| Elem::pair(x.fst().clone(), m.apply(x.snd())))
    };
    coend(cat, &value, &left, &right, format!("({}*{})", u.name, f.name))
}

/// A module over a one-object linear category whose arrows are spanned by
/// the given generators: one action matrix per generator.
#[derive(Clone, Debug)]
pub struct VecModule {
    pub dim: usize,
    pub actions: Vec<Mat>,
}

/// `U ⋆ F` over a one-object `F_p`-linear category: `U ⊗ F` modulo
/// `u·g ⊗ x = u ⊗ g·x` for every generator `g`.
pub fn vec_weighted_colimit(fv: &FinVec, u: &VecModule, f: &VecModule) -> Result<VecCoeq> {
    if u.actions.len() != f.actions.len() {
        return Err(Error::input("weight and diagram act by different generator lists"));
    }
    let n = u.dim * f.dim;
    let k = u.actions.len();
    let mut left = Mat::zeros(fv.p, n, n * k);
    let mut right = Mat::zeros(fv.p, n, n * k);
    for (g, (ua, fa)) in u.actions.iter().zip(&f.actions).enumerate() {
        let l = ua.kron(&Mat::identity(fv.p, f.dim));
        let r = Mat::identity(fv.p, u.dim).kron(fa);
        for i in 0..n {
            for j in 0..n {
                left.set(i, g * n + j, l.get(i, j));
                right.set(i, g * n + j, r.get(i, j));
            }
        }
    }
    fv.coequalizer(&left, &right)
}

/// Dimension of `U ⋆ F` over the trivial one-object category (scalars
/// only): the plain tensor product.
pub fn trivial_weighted_dim(fv: &FinVec, u: Space, f: Space) -> Result<usize> {
    let m = |d: usize| VecModule {
        dim: d,
        actions: vec![Mat::identity(fv.p, d)],
    };
    Ok(vec_weighted_colimit(fv, &m(u.0), &m(f.0))?.dim)
}

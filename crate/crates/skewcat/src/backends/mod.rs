//! The two concrete base categories and their colimit solvers.

pub mod coend;
pub mod coeq;
pub mod enrich;
pub mod finset;
pub mod finvec;

use serde::{Deserialize, Serialize};

use crate::cat::Category;
use crate::error::Result;
use finset::{Elem, Mor, Obj};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Backend {
    FinSet,
    FinVec { p: u32 },
}

/// A deliberate corruption of composition: composites `A -> B -> C` get a
/// different value at one input.
#[derive(Clone, Debug)]
pub struct ComposePatch {
    pub objs: [Obj; 3],
    pub input: Elem,
    pub output: Elem,
}

/// Finite sets and functions.
#[derive(Clone, Default)]
pub struct FinSet {
    pub patch: Option<ComposePatch>,
}

impl Category for FinSet {
    type Obj = Obj;
    type Mor = Mor;

    fn dom(&self, f: &Mor) -> Obj {
        f.dom().clone()
    }

    fn cod(&self, f: &Mor) -> Obj {
        f.cod().clone()
    }

    fn same_obj(&self, a: &Obj, b: &Obj) -> bool {
        a.same(b)
    }

    fn id(&self, a: &Obj) -> Mor {
        Mor::id(a)
    }

    fn compose(&self, g: &Mor, f: &Mor) -> Result<Mor> {
        let gf = g.try_after(f)?;
        match &self.patch {
            Some(p) if f.dom().same(&p.objs[0]) && f.cod().same(&p.objs[1]) && g.cod().same(&p.objs[2]) => {
                Ok(gf.patched(p.input.clone(), p.output.clone()))
            }
            _ => Ok(gf),
        }
    }

    fn diff(&self, f: &Mor, g: &Mor) -> Result<Option<(String, String, String)>> {
        Ok(f.first_difference(g)?.map(|(x, a, b)| (x.to_string(), a.to_string(), b.to_string())))
    }

    fn hom(&self, a: &Obj, b: &Obj) -> Result<Vec<Mor>> {
        finset::hom_set(a, b)
    }

    fn show(&self, f: &Mor) -> String {
        match f.table() {
            Ok(t) => format!("{}", Elem::fun(t)),
            Err(_) => format!("{} -> {}", f.dom(), f.cod()),
        }
    }
}

/// The copower `S ⊗ M`, which for sets is `S x M`, with its injections.
pub struct Copower {
    pub index: Obj,
    pub base: Obj,
    pub obj: Obj,
}

impl Copower {
    pub fn new(s: &Obj, m: &Obj) -> Copower {
        Copower {
            index: s.clone(),
            base: m.clone(),
            obj: Obj::product(s, m),
        }
    }

    /// The injection `M -> S ⊗ M` at `s`.
    pub fn inj(&self, s: &Elem) -> Mor {
        let s = s.clone();
        Mor::new(&self.base, &self.obj, move |m| Elem::pair(s.clone(), m.clone()))
    }

    /// `Hom(S ⊗ M, N) -> Map(S, Hom(M, N))`.
    pub fn transpose(&self, h: &Mor) -> Result<Vec<(Elem, Mor)>> {
        Ok(self
            .index
            .elems()?
            .iter()
            .map(|s| (s.clone(), h.after(&self.inj(s))))
            .collect())
    }

    /// The inverse bijection `Map(S, Hom(M, N)) -> Hom(S ⊗ M, N)`.
    pub fn untranspose(&self, family: &[(Elem, Mor)], n: &Obj) -> Mor {
        let table: std::collections::HashMap<Elem, Mor> = family.iter().cloned().collect();
        Mor::new(&self.obj, n, move |x| table[x.fst()].apply(x.snd()))
    }
}

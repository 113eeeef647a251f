//! Skew monoidal structures whose tensor is a quotient of an underlying
//! one. The coherences are forced: each is the unique factorization of the
//! underlying coherence through the quotient maps, so one generic
//! implementation serves the horizontal tensor on algebras, the underlying
//! tensor on E-objects and the quotient tensor of E-objects.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::backends::coeq::{factor_through, Coeq};
use crate::backends::finset::Mor;
use crate::error::Result;
use crate::skewmon::{chain, SkewOps};

/// The data a quotient tensor has to supply.
pub trait QuotientTensor: Send + Sync {
    type B: SkewOps;
    type O: Clone + Send + Sync;

    fn name(&self) -> String;
    fn base(&self) -> &Self::B;
    fn under(&self, a: &Self::O) -> <Self::B as SkewOps>::O;
    fn label(&self, a: &Self::O) -> String;
    fn unit(&self) -> Self::O;
    /// `A ⊛̂ B` together with the quotient `p : uA⊛uB -> u(A⊛̂B)`.
    fn tensor(&self, a: &Self::O, b: &Self::O) -> Result<(Self::O, Coeq)>;
    fn is_morphism(&self, f: &Mor, a: &Self::O, b: &Self::O) -> Result<bool>;
}

type Tensors<O> = Mutex<HashMap<(String, String), Arc<(O, Coeq)>>>;

pub struct Lifted<Q: QuotientTensor> {
    pub q: Q,
    tensors: Tensors<Q::O>,
    comps: Mutex<HashMap<(&'static str, Vec<String>), Mor>>,
}

impl<Q: QuotientTensor> Lifted<Q> {
    pub fn new(q: Q) -> Self {
        Lifted {
            q,
            tensors: Mutex::new(HashMap::new()),
            comps: Mutex::new(HashMap::new()),
        }
    }

    pub fn base(&self) -> &Q::B {
        self.q.base()
    }

    pub fn under(&self, a: &Q::O) -> <Q::B as SkewOps>::O {
        self.q.under(a)
    }

    /// The tensor and its quotient map, computed once per pair of labels.
    pub fn tensor_data(&self, a: &Q::O, b: &Q::O) -> Result<Arc<(Q::O, Coeq)>> {
        let key = (self.q.label(a), self.q.label(b));
        if let Some(t) = self.tensors.lock().expect("tensor cache").get(&key) {
            return Ok(t.clone());
        }
        let t = Arc::new(self.q.tensor(a, b)?);
        Ok(self.tensors.lock().expect("tensor cache").entry(key).or_insert(t).clone())
    }

    /// The quotient map `p_{A,B} : uA⊛uB -> u(A⊛̂B)`.
    pub fn proj(&self, a: &Q::O, b: &Q::O) -> Result<Mor> {
        Ok(self.tensor_data(a, b)?.1.proj.clone())
    }

    fn cached(&self, kind: &'static str, at: Vec<String>, build: impl FnOnce() -> Result<Mor>) -> Result<Mor> {
        let key = (kind, at);
        if let Some(m) = self.comps.lock().expect("component cache").get(&key) {
            return Ok(m.clone());
        }
        let m = build()?;
        Ok(self.comps.lock().expect("component cache").entry(key).or_insert(m).clone())
    }

    /// `p_{A,B⊛̂C}∘(uA⊛p_{B,C}) : uA⊛(uB⊛uC) -> u(A⊛̂(B⊛̂C))`.
    pub fn p_right(&self, a: &Q::O, b: &Q::O, c: &Q::O) -> Result<Mor> {
        let s = self.base();
        let (ua, ub, uc) = (self.under(a), self.under(b), self.under(c));
        let bc = self.tensor_data(b, c)?;
        let inner = s.whisker_right(&ua, &bc.1.proj, &s.tensor(&ub, &uc)?, &self.under(&bc.0))?;
        chain(&[inner, self.proj(a, &bc.0)?])
    }

    /// `p_{A⊛̂B,C}∘(p_{A,B}⊛uC)∘γ : uA⊛(uB⊛uC) -> u((A⊛̂B)⊛̂C)`.
    pub fn p_left(&self, a: &Q::O, b: &Q::O, c: &Q::O) -> Result<Mor> {
        let s = self.base();
        let (ua, ub, uc) = (self.under(a), self.under(b), self.under(c));
        let ab = self.tensor_data(a, b)?;
        let outer = s.whisker_left(&ab.1.proj, &s.tensor(&ua, &ub)?, &self.under(&ab.0), &uc)?;
        chain(&[s.gamma(&ua, &ub, &uc)?, outer, self.proj(&ab.0, c)?])
    }
}

impl<Q: QuotientTensor> SkewOps for Lifted<Q> {
    type O = Q::O;

    fn name(&self) -> String {
        self.q.name()
    }

    fn label(&self, a: &Q::O) -> String {
        self.q.label(a)
    }

    fn carrier(&self, a: &Q::O) -> crate::backends::finset::Obj {
        self.base().carrier(&self.under(a))
    }

    fn unit(&self) -> Q::O {
        self.q.unit()
    }

    fn tensor(&self, a: &Q::O, b: &Q::O) -> Result<Q::O> {
        Ok(self.tensor_data(a, b)?.0.clone())
    }

    fn whisker_left(&self, f: &Mor, a: &Q::O, a2: &Q::O, b: &Q::O) -> Result<Mor> {
        let s = self.base();
        let (from, to) = (self.tensor_data(a, b)?, self.tensor_data(a2, b)?);
        let h = chain(&[s.whisker_left(f, &self.under(a), &self.under(a2), &self.under(b))?, to.1.proj.clone()])?;
        from.1.factor(&h)
    }

    fn whisker_right(&self, a: &Q::O, g: &Mor, b: &Q::O, b2: &Q::O) -> Result<Mor> {
        let s = self.base();
        let (from, to) = (self.tensor_data(a, b)?, self.tensor_data(a, b2)?);
        let h = chain(&[s.whisker_right(&self.under(a), g, &self.under(b), &self.under(b2))?, to.1.proj.clone()])?;
        from.1.factor(&h)
    }

    fn gamma(&self, a: &Q::O, b: &Q::O, c: &Q::O) -> Result<Mor> {
        let at = vec![self.label(a), self.label(b), self.label(c)];
        self.cached("gamma", at, || factor_through(&self.p_right(a, b, c)?, &self.p_left(a, b, c)?))
    }

    fn eta(&self, a: &Q::O) -> Result<Mor> {
        self.cached("eta", vec![self.label(a)], || {
            let r = self.unit();
            chain(&[self.base().eta(&self.under(a))?, self.proj(&r, a)?])
        })
    }

    fn eps(&self, a: &Q::O) -> Result<Mor> {
        self.cached("eps", vec![self.label(a)], || {
            let r = self.unit();
            factor_through(&self.proj(a, &r)?, &self.base().eps(&self.under(a))?)
        })
    }

    fn is_morphism(&self, f: &Mor, a: &Q::O, b: &Q::O) -> Result<bool> {
        self.q.is_morphism(f, a, b)
    }
}

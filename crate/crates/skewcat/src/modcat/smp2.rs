//! `M⊛²N = M⊛TN` with `γ² = γ_{L,TM,TN}∘(L⊛γ_{R,M,TN})`,
//! `η² = η_{TM}∘η_M` and `ε² = ε_M∘(M⊛ε_R)`. Four of the five axioms
//! always hold; the triangle SMC4 needs `η` epi.

use crate::backends::finset::{Mor, Obj};
use crate::cat::{compare, equation, Check, Outcome, Witness};
use crate::error::Result;
use crate::skewmon::{chain, smc1, smc2, smc3, smc4, smc5, tuples, SetSkew, Shape, SkewOps};

pub struct Smp2<S> {
    pub s: S,
}

impl<S: SkewOps> SkewOps for Smp2<S> {
    type O = S::O;

    fn name(&self) -> String {
        format!("smp2[{}]", self.s.name())
    }

    fn label(&self, a: &S::O) -> String {
        self.s.label(a)
    }

    fn carrier(&self, a: &S::O) -> Obj {
        self.s.carrier(a)
    }

    fn unit(&self) -> S::O {
        self.s.unit()
    }

    fn tensor(&self, a: &S::O, b: &S::O) -> Result<S::O> {
        self.s.tensor(a, &self.s.t(b)?)
    }

    fn whisker_left(&self, f: &Mor, a: &S::O, a2: &S::O, b: &S::O) -> Result<Mor> {
        self.s.whisker_left(f, a, a2, &self.s.t(b)?)
    }

    fn whisker_right(&self, a: &S::O, g: &Mor, b: &S::O, b2: &S::O) -> Result<Mor> {
        let s = &self.s;
        s.whisker_right(a, &s.t_mor(g, b, b2)?, &s.t(b)?, &s.t(b2)?)
    }

    fn gamma(&self, l: &S::O, m: &S::O, n: &S::O) -> Result<Mor> {
        let s = &self.s;
        let r = s.unit();
        let (tm, tn) = (s.t(m)?, s.t(n)?);
        let inner = s.gamma(&r, m, &tn)?;
        chain(&[
            s.whisker_right(l, &inner, &s.t(&s.tensor(m, &tn)?)?, &s.tensor(&tm, &tn)?)?,
            s.gamma(l, &tm, &tn)?,
        ])
    }

    fn eta(&self, m: &S::O) -> Result<Mor> {
        chain(&[self.s.eta(m)?, self.s.eta(&self.s.t(m)?)?])
    }

    fn eps(&self, m: &S::O) -> Result<Mor> {
        let s = &self.s;
        let r = s.unit();
        chain(&[s.whisker_right(m, &s.eps(&r)?, &s.t(&r)?, &r)?, s.eps(m)?])
    }

    fn is_morphism(&self, f: &Mor, a: &S::O, b: &S::O) -> Result<bool> {
        self.s.is_morphism(f, a, b)
    }
}

/// Predicted SMC4 verdict for `⊛²` over a set structure: the composite
/// sends `(f,(e,n))` to `(f∘e,(1,n))`, so it is the identity exactly when
/// `E` is trivial or `M⊛²N` is empty.
pub fn smc4_prediction(s: &SetSkew, m: &Obj, n: &Obj) -> Result<bool> {
    Ok(match &s.shape {
        Shape::Cartesian => true,
        Shape::Dot { r } => r.size() <= 1 || Smp2 { s: s.clone() }.tensor(m, n)?.is_empty(),
    })
}

fn eta_epi<S: SkewOps>(s: &S, m: &S::O) -> Result<bool> {
    s.eta(m)?.is_surjective()
}

/// One SMC4 verdict for `⊛²`, with its failing point.
#[derive(Debug, Clone)]
pub struct Smc4Verdict {
    pub at: Vec<String>,
    pub holds: bool,
    pub witness: Option<Witness>,
}

pub fn smc4_verdicts<S: SkewOps>(p: &Smp2<S>, objs: &[S::O]) -> Result<Vec<Smc4Verdict>> {
    let mut out = Vec::new();
    for t in tuples(objs.len(), 2) {
        let (m, n) = (&objs[t[0]], &objs[t[1]]);
        let (l, r) = smc4(p, m, n)?;
        let o = compare(&l, &r)?;
        out.push(Smc4Verdict {
            at: vec![p.label(m), p.label(n)],
            holds: matches!(o, Outcome::Pass),
            witness: match o {
                Outcome::Fail(w) => Some(w),
                _ => None,
            },
        });
    }
    Ok(out)
}

/// SMC1, SMC2, SMC3, SMC5 for `⊛²`; SMC4 as agreement with the
/// prediction; and SMC4 wherever `η` is epi at both objects.
pub fn smp2_checks<'a>(p: &'a Smp2<SetSkew>, objs: &'a [Obj]) -> Vec<Check<'a>> {
    let n = objs.len();
    let lab = move |t: &[usize]| t.iter().map(|&i| objs[i].name().to_string()).collect::<Vec<_>>().join(",");
    let quads = tuples(n, 4);
    let pairs = tuples(n, 2);
    let pcases: Vec<String> = pairs.iter().map(|t| lab(t)).collect();
    let (p2, p3, p4, p5) = (pairs.clone(), pairs.clone(), pairs.clone(), pairs);
    vec![
        Check::new("smp2.SMC1", quads.iter().map(|t| lab(t)).collect(), move |i| {
            let t = &quads[i];
            equation(|| smc1(p, &objs[t[0]], &objs[t[1]], &objs[t[2]], &objs[t[3]]))
        }),
        Check::new("smp2.SMC2", pcases.clone(), move |i| equation(|| smc2(p, &objs[p2[i][0]], &objs[p2[i][1]]))),
        Check::new("smp2.SMC3", pcases.clone(), move |i| equation(|| smc3(p, &objs[p3[i][0]], &objs[p3[i][1]]))),
        Check::single("smp2.SMC5", "R", move || equation(|| smc5(p))),
        Check::new("smp2.SMC4-prediction", pcases.clone(), move |i| {
            let (m, nn) = (&objs[p4[i][0]], &objs[p4[i][1]]);
            Outcome::from_result((|| {
                let (l, r) = smc4(p, m, nn)?;
                let got = compare(&l, &r)?;
                let holds = matches!(got, Outcome::Pass);
                let want = smc4_prediction(&p.s, m, nn)?;
                Ok(Outcome::when(holds == want, || {
                    let w = match got {
                        Outcome::Fail(w) => w,
                        _ => Witness::new("-", "holds", "fails"),
                    };
                    w.with_note(format!("SMC4 verdict {holds}, predicted {want}"))
                }))
            })())
        }),
        Check::new("smp2.eta-epi-implies-SMC4", pcases, move |i| {
            let (m, nn) = (&objs[p5[i][0]], &objs[p5[i][1]]);
            Outcome::from_result((|| {
                if !(eta_epi(&p.s, m)? && eta_epi(&p.s, nn)?) {
                    return Ok(Outcome::Pass);
                }
                let (l, r) = smc4(p, m, nn)?;
                Ok(match compare(&l, &r)? {
                    Outcome::Fail(w) => Outcome::Fail(w.with_note("η is epi but SMC4 fails")),
                    o => o,
                })
            })())
        }),
    ]
}

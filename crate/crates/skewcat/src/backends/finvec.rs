//! Finite-dimensional vector spaces over a prime field, with matrices as
//! morphisms. Only Gaussian elimination is used; quotients are cokernels
//! with the non-pivot standard basis vectors as a fixed complement.

use std::fmt;

use crate::cat::{Category, Witness};
use crate::error::{Error, Result};
use crate::limits;

/// A `rows x cols` matrix over `F_p`, row-major. As a morphism it maps
/// `F_p^cols -> F_p^rows`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub p: u32,
    data: Vec<u32>,
}

impl Mat {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Mat {
        let mut m = Mat::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Result<Mat> {
        if data.len() != rows * cols {
            return Err(Error::input(format!(
                "matrix data has {} entries, expected {rows}x{cols}",
                data.len()
            )));
        }
        if let Some(x) = data.iter().find(|&&x| x >= p) {
            return Err(Error::input(format!("entry {x} is not reduced mod {p}")));
        }
        Ok(Mat { rows, cols, p, data })
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    /// `self * other`, i.e. `self ∘ other` as maps.
    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::input(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p as u64;
        let mut out = Mat::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0u64;
                for k in 0..self.cols {
                    acc += self.get(i, k) as u64 * other.get(k, j) as u64;
                }
                out.data[i * other.cols + j] = (acc % p) as u32;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::input("shape mismatch in subtraction"));
        }
        let p = self.p;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| (a + p - b) % p).collect();
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            p,
            data,
        })
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        (0..self.rows)
            .map(|i| ((0..self.cols).map(|j| self.get(i, j) as u64 * v[j] as u64).sum::<u64>() % p) as u32)
            .collect()
    }

    /// Kronecker product, the matrix of `self ⊗ other`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(self.p, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, self.get(i, j) * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// Block diagonal `diag(self, other)`.
    pub fn direct_sum(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(self.p, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            for j in 0..m.cols {
                let (a, b) = (m.get(r, j), m.get(piv, j));
                m.set(r, j, b);
                m.set(piv, j, a);
            }
            let inv = inv_mod(m.get(r, c), p);
            for j in 0..m.cols {
                m.set(r, j, m.get(r, j) * inv);
            }
            for i in 0..m.rows {
                if i != r && m.get(i, c) != 0 {
                    let factor = m.get(i, c);
                    for j in 0..m.cols {
                        let v = (m.get(i, j) + p * p - factor * m.get(r, j) % p) % p;
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ";")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} {}", self.rows, self.cols, self)
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2) is the inverse
    let (mut base, mut exp, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// A space is just its dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Space(pub usize);

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim{}", self.0)
    }
}

/// `F_p`-vector spaces and linear maps.
#[derive(Clone, Debug)]
pub struct FinVec {
    pub p: u32,
}

impl FinVec {
    pub fn new(p: u32) -> Result<FinVec> {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        Ok(FinVec { p })
    }

    /// Every matrix `dim a -> dim b`, in row-major odometer order.
    pub fn hom_set(&self, a: Space, b: Space) -> Result<Vec<Mat>> {
        let n = a.0 * b.0;
        let count = (self.p as usize).checked_pow(n as u32);
        let cap = limits::max_hom();
        match count {
            Some(c) if c <= cap => {}
            _ => {
                return Err(Error::Cap(format!(
                    "Hom({a},{b}) over F_{} exceeds the cap {cap}",
                    self.p
                )))
            }
        }
        let mut out = Vec::new();
        let mut digits = vec![0u32; n];
        loop {
            out.push(Mat::from_rows(self.p, b.0, a.0, digits.clone())?);
            let mut i = n;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < self.p {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    /// Copower of a finite index set of size `s` with a space: `s` block
    /// copies. Injection `k` is the inclusion of the `k`-th block.
    pub fn copower(&self, s: usize, m: Space) -> (Space, Vec<Mat>) {
        let obj = Space(s * m.0);
        let injections = (0..s)
            .map(|k| {
                let mut inj = Mat::zeros(self.p, obj.0, m.0);
                for i in 0..m.0 {
                    inj.set(k * m.0 + i, i, 1);
                }
                inj
            })
            .collect();
        (obj, injections)
    }

    pub fn coequalizer(&self, f: &Mat, g: &Mat) -> Result<VecCoeq> {
        if (f.rows, f.cols) != (g.rows, g.cols) {
            return Err(Error::input("not a parallel pair of matrices"));
        }
        let d = f.sub(g)?;
        // rows of dt span the image of f - g inside F_p^cod
        let (echelon, pivots) = d.transpose().rref();
        let cod = f.rows;
        let free: Vec<usize> = (0..cod).filter(|c| !pivots.contains(c)).collect();
        let mut q = Mat::zeros(self.p, free.len(), cod);
        for (k, &c) in free.iter().enumerate() {
            q.set(k, c, 1);
        }
        for (r, &pc) in pivots.iter().enumerate() {
            // e_pc is congruent to e_pc minus its echelon row, which vanishes
            // on every pivot coordinate
            for (k, &c) in free.iter().enumerate() {
                let v = echelon.get(r, c);
                q.set(k, pc, self.p - v);
            }
        }
        let mut section = Mat::zeros(self.p, cod, free.len());
        for (k, &c) in free.iter().enumerate() {
            section.set(c, k, 1);
        }
        Ok(VecCoeq {
            f: f.clone(),
            g: g.clone(),
            dim: free.len(),
            proj: q,
            section,
        })
    }
}

/// A cokernel-style coequalizer of two matrices.
#[derive(Clone, Debug)]
pub struct VecCoeq {
    pub f: Mat,
    pub g: Mat,
    pub dim: usize,
    pub proj: Mat,
    /// Inclusion of the fixed complement; `proj ∘ section = 1`.
    pub section: Mat,
}

impl VecCoeq {
    /// The unique `h'` with `h' ∘ proj = h`.
    pub fn factor(&self, h: &Mat) -> Result<Mat> {
        let hd = h.mul(&self.f.sub(&self.g)?)?;
        if let Some(j) = (0..hd.cols).find(|&j| (0..hd.rows).any(|i| hd.get(i, j) != 0)) {
            let mut e = vec![0u32; hd.cols];
            e[j] = 1;
            return Err(Error::structural_at(
                "linear map does not coequalize the pair",
                Witness::new(format!("{e:?}"), format!("{:?}", h.apply(&self.f.apply(&e))), format!("{:?}", h.apply(&self.g.apply(&e)))),
            ));
        }
        h.mul(&self.section)
    }
}

impl Category for FinVec {
    type Obj = Space;
    type Mor = Mat;

    fn dom(&self, f: &Mat) -> Space {
        Space(f.cols)
    }

    fn cod(&self, f: &Mat) -> Space {
        Space(f.rows)
    }

    fn same_obj(&self, a: &Space, b: &Space) -> bool {
        a == b
    }

    fn id(&self, a: &Space) -> Mat {
        Mat::identity(self.p, a.0)
    }

    fn compose(&self, g: &Mat, f: &Mat) -> Result<Mat> {
        g.mul(f)
    }

    fn diff(&self, f: &Mat, g: &Mat) -> Result<Option<(String, String, String)>> {
        if (f.rows, f.cols) != (g.rows, g.cols) {
            return Ok(Some(("-".into(), format!("{f:?}"), format!("{g:?}"))));
        }
        for j in 0..f.cols {
            let mut e = vec![0u32; f.cols];
            e[j] = 1;
            let (a, b) = (f.apply(&e), g.apply(&e));
            if a != b {
                return Ok(Some((format!("{e:?}"), format!("{a:?}"), format!("{b:?}"))));
            }
        }
        Ok(None)
    }

    fn hom(&self, a: &Space, b: &Space) -> Result<Vec<Mat>> {
        self.hom_set(*a, *b)
    }

    fn show(&self, f: &Mat) -> String {
        f.to_string()
    }
}

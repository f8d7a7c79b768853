//! Windowed projective resolutions and injective coresolutions of bounded complexes,
//! with syzygy periodicity detection.
//!
//! A resolution is grown one degree at a time: with `P^{>n}` and `φ^{>n}` built, the module
//! `K^n = {(x, c) ∈ P^{n+1} ⊕ C^n : dx = 0, φx = dc}` is covered by a projective `P^n`, whose
//! two components become `d^n` and `φ^n`. This keeps `Cone(φ)` exact in every degree `>= n`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{enveloping_algebra, find_isomorphism, ground_algebra, Algebra, BimoduleRep, ModuleRep, Side};
use crate::complex::{BoundedComplex, ChainMap};
use crate::error::{AlgebraError, ComplexError};
use crate::linalg::Field;
use crate::linalg::ExactMatrix;

#[cfg(test)]
mod tests;

/// Number of resolution steps taken below the support of the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ResolutionWindow {
    depth: usize,
}

impl ResolutionWindow {
    pub fn new(depth: usize) -> Result<ResolutionWindow, ComplexError> {
        if depth == 0 {
            return Err(AlgebraError::Malformed("resolution window must be at least 1".into()).into());
        }
        Ok(ResolutionWindow { depth })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }
}

impl Default for ResolutionWindow {
    fn default() -> Self {
        ResolutionWindow { depth: 8 }
    }
}

/// Which module structure of a bimodule complex is resolved.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Structure {
    /// As left modules over the left algebra.
    Left,
    /// As right modules over the right algebra.
    Right,
    /// As bimodules, i.e. over the enveloping algebra.
    Bimodule,
}

impl Structure {
    fn dual(self) -> Structure {
        match self {
            Structure::Left => Structure::Right,
            Structure::Right => Structure::Left,
            Structure::Bimodule => Structure::Bimodule,
        }
    }
}

/// `syzygy(offset) ≅ syzygy(offset + period)` via `witness`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicityCertificate {
    pub offset: usize,
    pub period: usize,
    pub witness: ExactMatrix,
}

/// A projective resolution `φ : P -> C`, extended on demand.
#[derive(Clone, Debug)]
pub struct Resolution {
    structure: Structure,
    ring: Arc<Algebra>,
    out_left: Arc<Algebra>,
    out_right: Arc<Algebra>,
    source: BoundedComplex,
    modules: BTreeMap<i32, ModuleRep>,
    support: Option<(i32, i32)>,
    terms: BTreeMap<i32, ModuleRep>,
    diffs: BTreeMap<i32, ExactMatrix>,
    aug: BTreeMap<i32, ExactMatrix>,
    kernels: BTreeMap<i32, (ModuleRep, ExactMatrix)>,
    next: i32,
}

fn view(c: &BoundedComplex, structure: Structure) -> BoundedComplex {
    match structure {
        Structure::Left => c.left_part(),
        Structure::Right => c.right_part(),
        Structure::Bimodule => c.clone(),
    }
}

impl Resolution {
    /// Sets up the resolution of `c`; call [`Resolution::extend_to`] to compute terms.
    pub fn new(c: &BoundedComplex, structure: Structure) -> Result<Resolution, ComplexError> {
        let (a, b) = (c.left_algebra().clone(), c.right_algebra().clone());
        let k = ground_algebra(c.field());
        let (ring, out_left, out_right) = match structure {
            Structure::Left => (a.clone(), a, k),
            Structure::Right => (b.opposite_arc(), k, b),
            Structure::Bimodule => (enveloping_algebra(&a, &b), a, b),
        };
        let modules = c
            .terms()
            .map(|(n, t)| {
                let m = match structure {
                    Structure::Left => t.left_module(),
                    Structure::Right => t.right_module().flip_side(),
                    Structure::Bimodule => t.env_module().clone(),
                };
                (n, m)
            })
            .collect();
        let support = c.support();
        let mut res = Resolution {
            structure,
            ring,
            out_left,
            out_right,
            source: view(c, structure),
            modules,
            support,
            terms: BTreeMap::new(),
            diffs: BTreeMap::new(),
            aug: BTreeMap::new(),
            kernels: BTreeMap::new(),
            next: support.map_or(0, |s| s.1),
        };
        if support.is_some() {
            res.compute_kernel(res.next)?;
        }
        Ok(res)
    }

    /// Resolution of `c` carried `depth` steps below its support.
    pub fn with_window(c: &BoundedComplex, structure: Structure, w: ResolutionWindow) -> Result<Resolution, ComplexError> {
        let mut r = Resolution::new(c, structure)?;
        if let Some((lo, _)) = r.support {
            r.extend_to(lo - w.depth() as i32)?;
        }
        Ok(r)
    }

    pub fn structure(&self) -> Structure {
        self.structure
    }

    /// The algebra the terms are projective over (enveloping or opposite as needed).
    pub fn ring(&self) -> &Arc<Algebra> {
        &self.ring
    }

    fn module(&self, n: i32) -> ModuleRep {
        self.modules
            .get(&n)
            .cloned()
            .unwrap_or_else(|| ModuleRep::zero(self.ring.clone(), Side::Left))
    }

    fn term_module(&self, n: i32) -> ModuleRep {
        self.terms
            .get(&n)
            .cloned()
            .unwrap_or_else(|| ModuleRep::zero(self.ring.clone(), Side::Left))
    }

    fn mat(map: &BTreeMap<i32, ExactMatrix>, n: i32, field: Field, rows: usize, cols: usize) -> ExactMatrix {
        map.get(&n).cloned().unwrap_or_else(|| ExactMatrix::zeros(field, rows, cols))
    }

    fn compute_kernel(&mut self, n: i32) -> Result<(), ComplexError> {
        let field = self.ring.field();
        let (p1, c0) = (self.term_module(n + 1), self.module(n));
        let (p2, c1) = (self.term_module(n + 2), self.module(n + 1));
        let d_p = Self::mat(&self.diffs, n + 1, field, p2.dim(), p1.dim());
        let phi = Self::mat(&self.aug, n + 1, field, c1.dim(), p1.dim());
        let d_c = self.source.diff(n);
        let mut delta = ExactMatrix::zeros(field, p2.dim() + c1.dim(), p1.dim() + c0.dim());
        delta.set_block(0, 0, &d_p);
        delta.set_block(p2.dim(), 0, &phi);
        delta.set_block(p2.dim(), p1.dim(), &d_c.neg());
        let sum = ModuleRep::direct_sum(&[&p1, &c0])?;
        let (k, incl) = sum.submodule(&delta.kernel_basis())?;
        self.kernels.insert(n, (k, incl));
        Ok(())
    }

    /// Whether no further terms are needed: the uncovered kernel vanishes below the support.
    pub fn is_finite(&self) -> bool {
        match self.support {
            None => true,
            Some((lo, _)) => self.next < lo && self.kernels[&self.next].0.dim() == 0,
        }
    }

    /// Computes terms down to degree `bottom` (or until the resolution terminates).
    pub fn extend_to(&mut self, bottom: i32) -> Result<(), ComplexError> {
        let Some((lo, _)) = self.support else { return Ok(()) };
        while self.next >= bottom && !(self.next < lo && self.kernels[&self.next].0.dim() == 0) {
            let n = self.next;
            let (k, incl) = self.kernels[&n].clone();
            let (p, pi) = match k.projective_cover() {
                Ok(c) => c,
                Err(AlgebraError::NotSplit) => k.free_cover(),
                Err(e) => return Err(e.into()),
            };
            let image = incl.mul(&pi);
            let p1 = self.term_module(n + 1).dim();
            let d = image.block(0, 0, p1, p.dim());
            let phi = image.block(p1, 0, image.rows() - p1, p.dim());
            if p.dim() > 0 {
                self.diffs.insert(n, d);
                self.aug.insert(n, phi);
                self.terms.insert(n, p);
            }
            self.next = n - 1;
            self.compute_kernel(n - 1)?;
        }
        Ok(())
    }

    /// Lowest degree with a computed term slot.
    pub fn bottom(&self) -> i32 {
        self.next + 1
    }

    /// `H^m(φ)` is bijective for `m >= trusted_from()`.
    pub fn trusted_from(&self) -> i32 {
        if self.is_finite() {
            i32::MIN
        } else {
            self.bottom() + 1
        }
    }

    fn output(&self, m: &ModuleRep) -> BimoduleRep {
        match self.structure {
            Structure::Left => BimoduleRep::from_module(m),
            Structure::Right => BimoduleRep::from_module(&m.flip_side()),
            Structure::Bimodule => BimoduleRep::from_env_module(self.out_left.clone(), self.out_right.clone(), m)
                .expect("projective over the enveloping algebra"),
        }
    }

    /// The computed part of `P` as a complex (bimodules, left or right modules per structure).
    pub fn complex(&self) -> BoundedComplex {
        let Some((_, hi)) = self.support else {
            return BoundedComplex::zero(self.out_left.clone(), self.out_right.clone());
        };
        let lo = self.bottom();
        let terms = (lo..=hi).map(|n| self.output(&self.term_module(n))).collect();
        let field = self.ring.field();
        let diffs = (lo..hi)
            .map(|n| Self::mat(&self.diffs, n, field, self.term_module(n + 1).dim(), self.term_module(n).dim()))
            .collect();
        BoundedComplex::assemble(self.out_left.clone(), self.out_right.clone(), lo, terms, diffs)
    }

    /// The complex being resolved, with only the resolved structure kept.
    pub fn source(&self) -> &BoundedComplex {
        &self.source
    }

    /// `φ : P -> C`.
    pub fn augmentation(&self) -> ChainMap {
        let p = self.complex();
        let comps = self.aug.iter().map(|(&n, f)| (n, f.clone())).collect();
        ChainMap::from_components_unchecked(&p, &self.source, comps)
    }

    /// The projective term in degree `n`, as a module over [`Resolution::ring`].
    pub fn term(&self, n: i32) -> Option<&ModuleRep> {
        self.terms.get(&n)
    }

    /// `syzygy(j)` is the module covered by `P^{lo - j}`; `syzygy(0)` is the input itself
    /// for a module in one degree.
    pub fn syzygy(&mut self, j: usize) -> Result<Option<ModuleRep>, ComplexError> {
        let Some((lo, _)) = self.support else { return Ok(None) };
        let n = lo - j as i32;
        if n < self.next {
            self.extend_to(n + 1)?;
        }
        Ok(self.kernels.get(&n).map(|(k, _)| k.clone()).or_else(|| {
            (n < self.next).then(|| ModuleRep::zero(self.ring.clone(), Side::Left))
        }))
    }

    /// Looks for `syzygy(o) ≅ syzygy(o + p)` with `o + p <= max_steps`, smallest `o + p`
    /// first. Returns `None` if none is found or the resolution terminates.
    pub fn detect_periodicity(&mut self, max_steps: usize) -> Result<Option<PeriodicityCertificate>, ComplexError> {
        let Some((lo, hi)) = self.support else { return Ok(None) };
        let start = usize::from(lo != hi);
        let mut seen: Vec<Option<ModuleRep>> = vec![None; start];
        for t in start..=max_steps {
            let s = self.syzygy(t)?.expect("syzygy within computed range");
            if s.dim() == 0 {
                return Ok(None);
            }
            for (j, prev) in seen.iter().enumerate().skip(start) {
                let prev = prev.as_ref().expect("stored");
                if prev.dim() != s.dim() {
                    continue;
                }
                if let Some(witness) = find_isomorphism(prev, &s)? {
                    return Ok(Some(PeriodicityCertificate {
                        offset: j,
                        period: t - j,
                        witness,
                    }));
                }
            }
            seen.push(Some(s));
        }
        Ok(None)
    }

    /// Projective dimension if the resolution terminates within `max_steps` below the support.
    pub fn length(&mut self, max_steps: usize) -> Result<Option<usize>, ComplexError> {
        let Some((lo, hi)) = self.support else { return Ok(Some(0)) };
        self.extend_to(lo - max_steps as i32)?;
        if !self.is_finite() {
            return Ok(None);
        }
        let bottom = self.terms.keys().next().copied().unwrap_or(hi);
        Ok(Some((hi - bottom).max(0) as usize))
    }
}

/// An injective coresolution `C -> J`, computed as the dual of a projective resolution
/// of the dual complex.
#[derive(Clone, Debug)]
pub struct Coresolution {
    inner: Resolution,
    source: BoundedComplex,
}

impl Coresolution {
    pub fn new(c: &BoundedComplex, structure: Structure) -> Result<Coresolution, ComplexError> {
        Ok(Coresolution {
            inner: Resolution::new(&c.dual(), structure.dual())?,
            source: view(c, structure),
        })
    }

    pub fn with_window(c: &BoundedComplex, structure: Structure, w: ResolutionWindow) -> Result<Coresolution, ComplexError> {
        let mut r = Coresolution::new(c, structure)?;
        if let Some((_, hi)) = c.support() {
            r.extend_to(hi + w.depth() as i32)?;
        }
        Ok(r)
    }

    /// Computes terms up to degree `top`.
    pub fn extend_to(&mut self, top: i32) -> Result<(), ComplexError> {
        self.inner.extend_to(-top)
    }

    pub fn is_finite(&self) -> bool {
        self.inner.is_finite()
    }

    /// Highest degree with a computed term slot.
    pub fn top(&self) -> i32 {
        -self.inner.bottom()
    }

    /// `H^m` of the coaugmentation is bijective for `m <= trusted_until()`.
    pub fn trusted_until(&self) -> i32 {
        if self.is_finite() {
            i32::MAX
        } else {
            -self.inner.trusted_from()
        }
    }

    pub fn complex(&self) -> BoundedComplex {
        self.inner.complex().dual()
    }

    pub fn source(&self) -> &BoundedComplex {
        &self.source
    }

    /// `C -> J`.
    pub fn coaugmentation(&self) -> ChainMap {
        let j = self.complex();
        let comps = self.inner.aug.iter().map(|(&n, f)| (-n, f.transpose())).collect();
        ChainMap::from_components_unchecked(&self.source, &j, comps)
    }

    /// The `j`-th cosyzygy (a right module over the opposite ring, dualized back).
    pub fn cosyzygy(&mut self, j: usize) -> Result<Option<ModuleRep>, ComplexError> {
        let s = self.inner.syzygy(j)?;
        Ok(s.map(|m| m.dual().flip_side()))
    }

    pub fn detect_periodicity(&mut self, max_steps: usize) -> Result<Option<PeriodicityCertificate>, ComplexError> {
        self.inner.detect_periodicity(max_steps)
    }

    pub fn length(&mut self, max_steps: usize) -> Result<Option<usize>, ComplexError> {
        self.inner.length(max_steps)
    }
}

fn module_structure(m: &ModuleRep) -> Structure {
    match m.side() {
        Side::Left => Structure::Left,
        Side::Right => Structure::Right,
    }
}

/// Projective resolution of a module, `depth` steps deep.
pub fn projective_resolution(m: &ModuleRep, w: ResolutionWindow) -> Result<Resolution, ComplexError> {
    let c = BoundedComplex::from_module(m, 0);
    Resolution::with_window(&c, module_structure(m), w)
}

/// Injective coresolution of a module, `depth` steps deep.
pub fn injective_coresolution(m: &ModuleRep, w: ResolutionWindow) -> Result<Coresolution, ComplexError> {
    let c = BoundedComplex::from_module(m, 0);
    Coresolution::with_window(&c, module_structure(m), w)
}

/// Periodicity of the minimal syzygies of `m`.
pub fn detect_periodicity(m: &ModuleRep, max_steps: usize) -> Result<Option<PeriodicityCertificate>, ComplexError> {
    let c = BoundedComplex::from_module(m, 0);
    Resolution::new(&c, module_structure(m))?.detect_periodicity(max_steps)
}

/// Outcome of [`coresolution_dimension`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoresolutionDimension {
    Exactly(usize),
    ExceedsBound,
}

/// Least `n <= bound` such that the `n`-th cosyzygy of the injective coresolution of `m`
/// satisfies `in_class`. Injective modules are assumed to lie in the class.
pub fn coresolution_dimension<F>(m: &ModuleRep, mut in_class: F, bound: usize) -> Result<CoresolutionDimension, ComplexError>
where
    F: FnMut(&ModuleRep) -> Result<bool, ComplexError>,
{
    let mut cores = Coresolution::new(&BoundedComplex::from_module(m, 0), module_structure(m))?;
    for n in 0..=bound {
        let z = if n == 0 { m.clone() } else { cores.cosyzygy(n)?.expect("computed") };
        if in_class(&z)? {
            return Ok(CoresolutionDimension::Exactly(n));
        }
    }
    Ok(CoresolutionDimension::ExceedsBound)
}

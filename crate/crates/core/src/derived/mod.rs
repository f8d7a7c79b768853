//! Derived Hom and tensor functors of a fixed bimodule complex, with trust ranges,
//! and the explicit adjunction unit and counit.

mod adjunction;

pub use adjunction::{dg_adjunction_check, AdjunctionCheck, AdjunctionKind, DgAdjunction};

use std::collections::HashMap;
use std::sync::Mutex;

use crate::complex::{hom_complex, tensor_complex, BoundedComplex, Over};
use crate::error::{AlgebraError, ComplexError};
use crate::resolution::{Coresolution, Resolution, ResolutionWindow, Structure};

#[cfg(test)]
mod tests;

/// Which argument is replaced by a (co)resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Resolve the fixed complex `L` (projective resolution as bimodules).
    ResolveFirst,
    /// Resolve the variable argument (injective coresolution for Hom, projective for tensor).
    ResolveSecond,
}

/// Degrees `lo..=hi` in which computed homology equals the true derived homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Trust {
    pub lo: i32,
    pub hi: i32,
}

impl Trust {
    pub const ALL: Trust = Trust {
        lo: i32::MIN,
        hi: i32::MAX,
    };

    pub fn contains(&self, n: i32) -> bool {
        self.lo <= n && n <= self.hi
    }

    pub fn is_everything(&self) -> bool {
        *self == Trust::ALL
    }

    /// A typed refusal when `n` is outside the range.
    pub fn check(&self, n: i32) -> Result<(), ComplexError> {
        if self.contains(n) {
            Ok(())
        } else {
            Err(ComplexError::WindowExceeded {
                degree: n,
                lo: self.lo,
                hi: self.hi,
            })
        }
    }
}

/// A derived Hom or tensor product, computed through the named resolution.
#[derive(Clone, Debug)]
pub struct DerivedResult {
    pub complex: BoundedComplex,
    pub trust: Trust,
    pub strategy: Strategy,
    pub resolved: Structure,
    pub window: ResolutionWindow,
}

impl DerivedResult {
    /// `dim H^n`, refused outside the trust range.
    pub fn homology_dim(&self, n: i32) -> Result<usize, ComplexError> {
        self.trust.check(n)?;
        Ok(self.complex.homology_dim(n))
    }
}

/// A bimodule complex `L` with cached resolutions.
#[derive(Debug)]
pub struct DerivedContext {
    l: BoundedComplex,
    cache: Mutex<HashMap<Structure, Resolution>>,
}

fn one_sided(c: &BoundedComplex) -> Structure {
    if c.right_algebra().dim() == 1 {
        Structure::Left
    } else {
        Structure::Bimodule
    }
}

fn depth(w: ResolutionWindow) -> i32 {
    w.depth() as i32
}

impl DerivedContext {
    pub fn new(l: BoundedComplex) -> DerivedContext {
        DerivedContext {
            l,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn complex(&self) -> &BoundedComplex {
        &self.l
    }

    /// The resolution of `L` with the given structure, computed at least down to `bottom`.
    pub fn resolution(&self, structure: Structure, bottom: i32) -> Result<Resolution, ComplexError> {
        let mut cache = self.cache.lock().expect("resolution cache poisoned");
        let r = match cache.entry(structure) {
            std::collections::hash_map::Entry::Occupied(e) => e.into_mut(),
            std::collections::hash_map::Entry::Vacant(v) => v.insert(Resolution::new(&self.l, structure)?),
        };
        r.extend_to(bottom)?;
        Ok(r.clone())
    }

    fn support(&self) -> (i32, i32) {
        self.l.support().unwrap_or((0, 0))
    }

    /// `RHom_A(L, M)` for a complex `M` of `A`-`C` bimodules; a complex of `B`-`C`
    /// bimodules (`C` is dropped to the ground field when the second argument is resolved
    /// as a one-sided complex).
    pub fn rhom(&self, m: &BoundedComplex, w: ResolutionWindow, strategy: Strategy) -> Result<DerivedResult, ComplexError> {
        if !crate::algebra::same_algebra(self.l.left_algebra(), m.left_algebra()) {
            return Err(AlgebraError::Mismatch("RHom over mismatched algebras".into()).into());
        }
        let (l_lo, l_hi) = self.support();
        let Some((m_lo, m_hi)) = m.support() else {
            return Ok(self.trivial(m, w, strategy, Structure::Left));
        };
        if self.l.is_zero() {
            return Ok(self.trivial(m, w, strategy, Structure::Bimodule));
        }
        match strategy {
            Strategy::ResolveFirst => {
                let p = self.resolution(Structure::Bimodule, l_lo - depth(w))?;
                let h = hom_complex(&p.complex(), m, Over::Left)?;
                let hi = if p.is_finite() { i32::MAX } else { m_lo - p.bottom() - 1 };
                Ok(DerivedResult {
                    complex: h.complex,
                    trust: Trust { lo: i32::MIN, hi },
                    strategy,
                    resolved: Structure::Bimodule,
                    window: w,
                })
            }
            Strategy::ResolveSecond => {
                let s = one_sided(m);
                let mut j = Coresolution::new(m, s)?;
                j.extend_to(m_hi + depth(w))?;
                let h = hom_complex(&self.l, &j.complex(), Over::Left)?;
                let hi = if j.is_finite() { i32::MAX } else { j.top() - l_hi - 1 };
                Ok(DerivedResult {
                    complex: h.complex,
                    trust: Trust { lo: i32::MIN, hi },
                    strategy,
                    resolved: s,
                    window: w,
                })
            }
        }
    }

    /// `L ⊗^L_B N` for a complex `N` of `B`-`C` bimodules; a complex of `A`-`C` bimodules.
    pub fn derived_tensor(
        &self,
        n: &BoundedComplex,
        w: ResolutionWindow,
        strategy: Strategy,
    ) -> Result<DerivedResult, ComplexError> {
        if !crate::algebra::same_algebra(self.l.right_algebra(), n.left_algebra()) {
            return Err(AlgebraError::Mismatch("tensor over mismatched algebras".into()).into());
        }
        let (l_lo, l_hi) = self.support();
        let Some((_, n_hi)) = n.support() else {
            return self.trivial_tensor(n, w, strategy);
        };
        if self.l.is_zero() {
            return self.trivial_tensor(n, w, strategy);
        }
        match strategy {
            Strategy::ResolveFirst => {
                let p = self.resolution(Structure::Bimodule, l_lo - depth(w))?;
                let t = tensor_complex(&p.complex(), n)?;
                let lo = if p.is_finite() { i32::MIN } else { p.bottom() + n_hi + 1 };
                Ok(DerivedResult {
                    complex: t.complex,
                    trust: Trust { lo, hi: i32::MAX },
                    strategy,
                    resolved: Structure::Bimodule,
                    window: w,
                })
            }
            Strategy::ResolveSecond => {
                let s = one_sided(n);
                let q = Resolution::with_window(n, s, w)?;
                let t = tensor_complex(&self.l, &q.complex())?;
                let lo = if q.is_finite() { i32::MIN } else { l_hi + q.bottom() + 1 };
                Ok(DerivedResult {
                    complex: t.complex,
                    trust: Trust { lo, hi: i32::MAX },
                    strategy,
                    resolved: s,
                    window: w,
                })
            }
        }
    }

    fn trivial(
        &self,
        m: &BoundedComplex,
        w: ResolutionWindow,
        strategy: Strategy,
        resolved: Structure,
    ) -> DerivedResult {
        DerivedResult {
            complex: BoundedComplex::zero(self.l.right_algebra().clone(), m.right_algebra().clone()),
            trust: Trust::ALL,
            strategy,
            resolved,
            window: w,
        }
    }

    fn trivial_tensor(&self, n: &BoundedComplex, w: ResolutionWindow, strategy: Strategy) -> Result<DerivedResult, ComplexError> {
        Ok(DerivedResult {
            complex: BoundedComplex::zero(self.l.left_algebra().clone(), n.right_algebra().clone()),
            trust: Trust::ALL,
            strategy,
            resolved: Structure::Left,
            window: w,
        })
    }

    /// `dim Ext^n_A(L, M)`.
    pub fn ext(&self, m: &BoundedComplex, n: i32, w: ResolutionWindow, strategy: Strategy) -> Result<usize, ComplexError> {
        self.rhom(m, w, strategy)?.homology_dim(n)
    }

    /// `dim Tor_k^B(L, N) = dim H^{-k}(L ⊗^L_B N)`.
    pub fn tor(&self, n: &BoundedComplex, k: i32, w: ResolutionWindow, strategy: Strategy) -> Result<usize, ComplexError> {
        self.derived_tensor(n, w, strategy)?.homology_dim(-k)
    }
}

/// `RHom_A(L, M)` without a shared cache.
pub fn rhom(l: &BoundedComplex, m: &BoundedComplex, w: ResolutionWindow, strategy: Strategy) -> Result<DerivedResult, ComplexError> {
    DerivedContext::new(l.clone()).rhom(m, w, strategy)
}

/// `L ⊗^L_B N` without a shared cache.
pub fn derived_tensor(
    l: &BoundedComplex,
    n: &BoundedComplex,
    w: ResolutionWindow,
    strategy: Strategy,
) -> Result<DerivedResult, ComplexError> {
    DerivedContext::new(l.clone()).derived_tensor(n, w, strategy)
}

/// `dim Ext^n_A(L, M)`.
pub fn ext(l: &BoundedComplex, m: &BoundedComplex, n: i32, w: ResolutionWindow, strategy: Strategy) -> Result<usize, ComplexError> {
    DerivedContext::new(l.clone()).ext(m, n, w, strategy)
}

/// `dim Tor_k^B(L, N)`.
pub fn tor(l: &BoundedComplex, n: &BoundedComplex, k: i32, w: ResolutionWindow, strategy: Strategy) -> Result<usize, ComplexError> {
    DerivedContext::new(l.clone()).tor(n, k, w, strategy)
}

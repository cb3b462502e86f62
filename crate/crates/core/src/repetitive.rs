//! Computations in the repetitive algebra `Â` through a finite window.
//!
//! `Â` is never built. An `A^(m)`-module is placed at layers
//! `o..=o+m` of a larger replicated algebra `A^(W)`. As long as a module
//! stays inside layers `1..=W-1`, its projective cover only uses `P_(i,q)`
//! with `q ≥ 1` and its injective envelope only uses `I_(i,q)` with
//! `q ≤ W-1`; these are projective-injective over `Â`, so syzygies,
//! cosyzygies, Ext and stable Hom agree with their `Â` counterparts.

use std::sync::Arc;

use crate::algebra::{replicated_algebra_arc, LayerEmbedding, ScAlgebra};
use crate::error::{Error, Result};
use crate::homology::{cosyzygy, syzygy, ProjectiveResolution};
use crate::module::FDModule;

/// A finite window `A^(W)` of `Â` around a copy of `A^(m)`.
#[derive(Clone, Debug)]
pub struct HatWindow {
    embedding: LayerEmbedding,
    base: LayerEmbedding,
}

impl HatWindow {
    /// Room for `below` syzygy steps and `above` cosyzygy steps around `A^(m)`.
    pub fn new(alg: &Arc<ScAlgebra>, below: usize, above: usize) -> Result<Self> {
        let info = alg
            .replicated()
            .ok_or_else(|| Error::Precondition("not a replicated algebra".into()))?;
        let m = info.level;
        let offset = below + 1;
        let top = offset + m + above + 1;
        let big = replicated_algebra_arc(info.quiver.clone(), top, alg.prime())?;
        let a0 = replicated_algebra_arc(info.quiver.clone(), 0, alg.prime())?;
        Ok(HatWindow {
            embedding: LayerEmbedding::new(alg.clone(), big.clone(), offset)?,
            base: LayerEmbedding::new(a0, big, offset)?,
        })
    }

    /// The window algebra `A^(W)`.
    pub fn window(&self) -> &Arc<ScAlgebra> {
        self.embedding.big()
    }

    /// The replicated algebra placed inside the window.
    pub fn inner(&self) -> &Arc<ScAlgebra> {
        self.embedding.small()
    }

    /// `A = A^(0)`, whose modules sit in frame layer 0.
    pub fn hereditary(&self) -> &Arc<ScAlgebra> {
        self.base.small()
    }

    /// Window layer of frame layer 0.
    pub fn offset(&self) -> usize {
        self.embedding.offset()
    }

    pub fn top_layer(&self) -> usize {
        self.window().top_layer()
    }

    pub fn lift(&self, x: &FDModule) -> Result<FDModule> {
        self.embedding.inflate(x)
    }

    pub fn lower(&self, x: &FDModule) -> Result<FDModule> {
        self.embedding.deflate(x)
    }

    /// Places an `A`-module at frame layer `layer`.
    pub fn lift_hereditary(&self, n: &FDModule, layer: usize) -> Result<FDModule> {
        if layer == 0 {
            return self.base.inflate(n);
        }
        let shifted = LayerEmbedding::new(
            self.hereditary().clone(),
            self.window().clone(),
            self.offset() + layer,
        )?;
        shifted.inflate(n)
    }

    /// Support layers of a window module, in frame coordinates (may be negative).
    pub fn frame_layers(&self, x: &FDModule) -> Vec<i64> {
        x.support_layers()
            .into_iter()
            .map(|l| l as i64 - self.offset() as i64)
            .collect()
    }

    fn interior(&self, x: &FDModule) -> Result<()> {
        let layers = x.support_layers();
        match (layers.first(), layers.last()) {
            (Some(&lo), Some(&hi)) if lo == 0 || hi >= self.top_layer() => {
                Err(Error::WindowExhausted(format!(
                    "window layers {lo}..={hi} touch the boundary of A^({})",
                    self.top_layer()
                )))
            }
            _ => Ok(()),
        }
    }

    /// `Ω^s` for `s > 0`, `Ω^{-s}` for `s < 0`, of a window module.
    pub fn omega(&self, x: &FDModule, s: i64) -> Result<FDModule> {
        let mut cur = x.clone();
        for _ in 0..s.unsigned_abs() {
            self.interior(&cur)?;
            cur = if s > 0 {
                syzygy(&cur)?
            } else {
                cosyzygy(&cur)?
            };
        }
        self.interior(&cur)?;
        Ok(cur)
    }

    /// `dim Ext^s_Â(X, Y)` from a projective resolution computed in the window.
    pub fn ext_dim(&self, s: usize, x: &FDModule, y: &FDModule) -> Result<usize> {
        self.interior(x)?;
        self.interior(y)?;
        let res = ProjectiveResolution::new(x, Some(s + 1))?;
        let alg = self.window();
        for k in 0..res.len() {
            if res.term(k).iter().any(|&v| alg.vertex_layer(v) == 0) {
                return Err(Error::WindowExhausted(format!(
                    "resolution term {k} reaches window layer 0"
                )));
            }
        }
        Ok(res.ext_dims(y, s)?[s])
    }

    /// Stable Hom over `Â` between window modules.
    pub fn stable_hom_dim(&self, x: &FDModule, y: &FDModule) -> Result<usize> {
        self.interior(x)?;
        self.interior(y)?;
        crate::homology::stable_hom_dim(x, y)
    }

    /// Degree of an indecomposable non-projective-injective `A^(m)`-module:
    /// the least `l ≥ 0` with `Ω^l X` inside frame layer 0, together with that
    /// `A`-module `N` (so `X ≅ Ω^{-l} N`).
    pub fn degree(&self, x: &FDModule) -> Result<(usize, FDModule)> {
        let mut cur = self.lift(x)?;
        for l in 0..self.offset() {
            if cur.is_zero() {
                return Err(Error::ProjectiveInjective);
            }
            if cur.support_layers() == [self.offset()] {
                return Ok((l, self.base.deflate(&cur)?));
            }
            self.interior(&cur)?;
            cur = syzygy(&cur)?;
        }
        Err(Error::WindowExhausted(format!(
            "no degree found within {} syzygies",
            self.offset()
        )))
    }
}

/// `Ω^s_Â M` for an `A^(m)`-module, in a window with `depth` spare layers.
pub fn omega(m: &FDModule, s: i64, depth: usize) -> Result<(HatWindow, FDModule)> {
    let below = s.max(0) as usize + depth;
    let above = (-s).max(0) as usize + depth;
    let win = HatWindow::new(m.algebra(), below, above)?;
    let lifted = win.lift(m)?;
    let out = win.omega(&lifted, s)?;
    Ok((win, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{replicated_algebra, vertex_index};
    use crate::decompose::is_isomorphic;
    use crate::linalg::DEFAULT_PRIME;
    use crate::module::{projective, simple};
    use crate::quiver::Quiver;

    fn dup() -> Arc<ScAlgebra> {
        replicated_algebra(&Quiver::linear_a(3), 1, DEFAULT_PRIME).unwrap()
    }

    #[test]
    fn cosyzygy_of_simple_and_round_trip() {
        let a = dup();
        let s3 = simple(&a, vertex_index(&a, 2, 0));
        let (win, c) = omega(&s3, -1, 1).unwrap();
        assert_eq!(win.frame_layers(&c), vec![0, 1]);
        let back = win.omega(&c, 1).unwrap();
        assert!(is_isomorphic(&back, &win.lift(&s3).unwrap()).unwrap());
        // result does not depend on the spare depth
        let (win2, c2) = omega(&s3, -1, 3).unwrap();
        assert_eq!(
            win2.lower(&c2).unwrap().dims(),
            win.lower(&c).unwrap().dims()
        );
    }

    #[test]
    fn projective_injectives_have_zero_syzygy() {
        let a = dup();
        let p = projective(&a, vertex_index(&a, 0, 1));
        let (_, o) = omega(&p, 1, 1).unwrap();
        assert!(o.is_zero());
        let win = HatWindow::new(&a, 4, 4).unwrap();
        assert!(matches!(win.degree(&p), Err(Error::ProjectiveInjective)));
    }

    #[test]
    fn degrees() {
        let a = dup();
        let win = HatWindow::new(&a, 4, 4).unwrap();
        let s = simple(&a, vertex_index(&a, 2, 0));
        assert_eq!(win.degree(&s).unwrap().0, 0);
        let c = win
            .lower(&win.omega(&win.lift(&s).unwrap(), -1).unwrap())
            .unwrap();
        let (l, n) = win.degree(&c).unwrap();
        assert_eq!(l, 1);
        assert_eq!(n.dims(), simple(win.hereditary(), 2).dims());
    }
}

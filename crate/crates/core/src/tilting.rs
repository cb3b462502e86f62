//! Tilting modules over `A^(m)`: the catalog of indecomposables, tilting
//! enumeration, complement chains, mutation, degrees, mutation teams and the
//! left part `L_m`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{vertex_index, ScAlgebra};
use crate::approx::{is_faithful, minimal_left_approx, minimal_right_approx, AddCategory};
use crate::cluster::{CmObject, DbStalk, DerivedModel};
use crate::decompose::{is_indecomposable, is_isomorphic};
use crate::error::{Error, Result};
use crate::export::{fingerprint, id_from_fingerprints};
use crate::homology::{proj_dim, top_generators, ProjectiveResolution};
use crate::linalg::{FpMatrix, Subspace};
use crate::module::{cokernel, kernel, projective, FDModule, ModMorphism};
use crate::par;
use crate::repetitive::HatWindow;

/// Level of a replicated algebra, or a precondition error.
pub fn level_of(alg: &ScAlgebra) -> Result<usize> {
    alg.level()
        .ok_or_else(|| Error::Precondition(format!("{} is not a replicated algebra", alg.id())))
}

/// A window with room for every degree of an `A^(m)`-module (at most
/// `2m+2` syzygy steps down, the same number of cosyzygy steps up).
pub fn degree_window(alg: &Arc<ScAlgebra>) -> Result<HatWindow> {
    let m = level_of(alg)?;
    HatWindow::new(alg, 2 * m + 3, m + 4)
}

/// `Ext^i(M, M) = 0` for `1 ≤ i ≤ 2m+1`.
pub fn is_exceptional(m: &FDModule) -> Result<bool> {
    let top = 2 * level_of(m.algebra())? + 1;
    let res = ProjectiveResolution::new(m, Some(top + 1))?;
    Ok(res.ext_dims(m, top)?.iter().skip(1).all(|&d| d == 0))
}

/// Over `A^(m)` every module has finite projective dimension, so partial
/// tilting is the same as exceptional.
pub fn is_partial_tilting(m: &FDModule) -> Result<bool> {
    is_exceptional(m)
}

/// Partial tilting with `n(m+1)` pairwise non-isomorphic indecomposable summands.
pub fn is_tilting(m: &FDModule, seed: u64) -> Result<bool> {
    if !is_partial_tilting(m)? {
        return Ok(false);
    }
    Ok(AddCategory::from_module(m, seed)?.len() == m.algebra().vertex_count())
}

/// An indecomposable `A^(m)`-module with its invariants.
#[derive(Clone, Debug)]
pub struct IndEntry {
    pub module: FDModule,
    pub proj_inj: bool,
    /// `(deg X, index of N in the derived model)` with `X ≅ Ω^{-deg} N`.
    pub degree: Option<(usize, usize)>,
    pub pd: usize,
    pub cm: Option<CmObject>,
    pub fingerprint: Vec<usize>,
}

/// All indecomposable `A^(m)`-modules for a Dynkin quiver, with the table
/// `ext[s][i][j] = dim Ext^s(X_i, X_j)` for `0 ≤ s ≤ 2m+1`.
pub struct Catalog {
    alg: Arc<ScAlgebra>,
    window: HatWindow,
    model: Arc<DerivedModel>,
    entries: Vec<IndEntry>,
    ext: Vec<Vec<Vec<usize>>>,
}

impl fmt::Debug for Catalog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Catalog({}, {} indecomposables)",
            self.alg.id(),
            self.entries.len()
        )
    }
}

impl Catalog {
    pub fn new(alg: &Arc<ScAlgebra>) -> Result<Self> {
        let model = Arc::new(DerivedModel::for_quiver_of(alg)?);
        Catalog::with_model(alg, model)
    }

    pub fn with_model(alg: &Arc<ScAlgebra>, model: Arc<DerivedModel>) -> Result<Self> {
        let m = level_of(alg)?;
        let window = degree_window(alg)?;
        let mut found: Vec<(FDModule, Option<(usize, usize)>)> = Vec::new();
        let mut shifted: Vec<FDModule> = model
            .indecomposables()
            .iter()
            .map(|n| window.lift_hereditary(n, 0))
            .collect::<Result<_>>()?;
        // Ω^{-l} N moves up at most one layer per step, so once every shift
        // starts above layer m nothing new can appear.
        for l in 0.. {
            if shifted
                .iter()
                .all(|x| window.frame_layers(x).first().is_none_or(|&q| q > m as i64))
            {
                break;
            }
            if l > 2 * m + 2 {
                return Err(Error::Internal(
                    "cosyzygy shifts did not leave A^(m)".into(),
                ));
            }
            for (idx, x) in shifted.iter().enumerate() {
                let layers = window.frame_layers(x);
                if !x.is_zero() && layers.iter().all(|&q| (0..=m as i64).contains(&q)) {
                    found.push((window.lower(x)?, Some((l, idx))));
                }
            }
            shifted = shifted
                .iter()
                .map(|x| window.omega(x, -1))
                .collect::<Result<_>>()?;
        }
        for q in 1..=m {
            for v in 0..model.algebra().vertex_count() {
                found.push((projective(alg, vertex_index(alg, v, q)), None));
            }
        }
        let entries: Vec<Result<IndEntry>> = par::map(&found, |(x, degree)| {
            let cm = match degree {
                Some((l, idx)) if m >= 1 => Some(model.cm_normalize(
                    DbStalk {
                        module: *idx,
                        shift: *l as i64,
                    },
                    m,
                )?),
                _ => None,
            };
            Ok(IndEntry {
                module: x.clone(),
                proj_inj: degree.is_none(),
                degree: *degree,
                pd: proj_dim(x)?,
                cm,
                fingerprint: fingerprint(x)?,
            })
        });
        let entries = entries.into_iter().collect::<Result<Vec<_>>>()?;
        let top = 2 * m + 1;
        let rows: Vec<Result<Vec<Vec<usize>>>> = par::map(&entries, |e| {
            let res = ProjectiveResolution::new(&e.module, Some(top + 1))?;
            entries
                .iter()
                .map(|f| res.ext_dims(&f.module, top))
                .collect()
        });
        let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
        let ext = (0..=top)
            .map(|s| {
                rows.iter()
                    .map(|r| r.iter().map(|d| d[s]).collect())
                    .collect()
            })
            .collect();
        Ok(Catalog {
            alg: alg.clone(),
            window,
            model,
            entries,
            ext,
        })
    }

    pub fn algebra(&self) -> &Arc<ScAlgebra> {
        &self.alg
    }

    pub fn level(&self) -> usize {
        self.alg.level().unwrap_or(0)
    }

    pub fn window(&self) -> &HatWindow {
        &self.window
    }

    pub fn model(&self) -> &Arc<DerivedModel> {
        &self.model
    }

    pub fn entries(&self) -> &[IndEntry] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &IndEntry {
        &self.entries[i]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn ext(&self, s: usize, i: usize, j: usize) -> usize {
        self.ext[s][i][j]
    }

    pub fn hom(&self, i: usize, j: usize) -> usize {
        self.ext[0][i][j]
    }

    pub fn top_degree(&self) -> usize {
        self.ext.len() - 1
    }

    pub fn projective_injectives(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.entries[i].proj_inj)
            .collect()
    }

    pub fn is_exceptional(&self, i: usize) -> bool {
        (1..self.ext.len()).all(|s| self.ext[s][i][i] == 0)
    }

    /// `Ext^{>0}` vanishes in both directions.
    pub fn compatible(&self, i: usize, j: usize) -> bool {
        (1..self.ext.len()).all(|s| self.ext[s][i][j] == 0 && self.ext[s][j][i] == 0)
    }

    /// Catalog index of an indecomposable module.
    pub fn index_of(&self, x: &FDModule) -> Result<Option<usize>> {
        let fp = fingerprint(x)?;
        for (i, e) in self.entries.iter().enumerate() {
            if e.fingerprint == fp && is_isomorphic(&e.module, x)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Like [`Catalog::index_of`] but an error when absent.
    pub fn require_index(&self, x: &FDModule) -> Result<usize> {
        self.index_of(x)?.ok_or_else(|| {
            Error::Internal(format!(
                "module with dims {:?} is not in the catalog",
                x.dims()
            ))
        })
    }

    pub fn direct_sum(&self, idx: &[usize]) -> Result<FDModule> {
        let parts: Vec<FDModule> = idx
            .iter()
            .map(|&i| self.entries[i].module.clone())
            .collect();
        FDModule::direct_sum_all(&self.alg, &parts)
    }

    pub fn add_category(&self, idx: &[usize]) -> Result<AddCategory> {
        AddCategory::new(
            idx.iter()
                .map(|&i| self.entries[i].module.clone())
                .collect(),
        )
    }

    /// Content id of a basic module given by catalog indices.
    pub fn id_of(&self, idx: &[usize]) -> String {
        let fps: Vec<Vec<usize>> = idx
            .iter()
            .map(|&i| self.entries[i].fingerprint.clone())
            .collect();
        id_from_fingerprints(&fps)
    }

    /// Complements of an almost complete tilting module, by exhaustive scan.
    pub fn complements(&self, almost: &[usize]) -> Vec<usize> {
        (0..self.len())
            .filter(|x| !almost.contains(x) && self.is_exceptional(*x))
            .filter(|&x| almost.iter().all(|&y| self.compatible(x, y)))
            .collect()
    }

    /// `L_m` membership for every entry: all predecessors have `pd ≤ m`.
    pub fn left_part(&self) -> Vec<bool> {
        let n = self.len();
        let m = self.level();
        // reach[i] = entries with a path of nonzero non-isomorphisms into i
        let mut reach: Vec<BTreeSet<usize>> = (0..n).map(|i| BTreeSet::from([i])).collect();
        loop {
            let mut changed = false;
            for i in 0..n {
                for j in 0..n {
                    if i != j && self.hom(j, i) != 0 {
                        let add: Vec<usize> = reach[j].difference(&reach[i]).copied().collect();
                        if !add.is_empty() {
                            reach[i].extend(add);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        reach
            .iter()
            .map(|r| r.iter().all(|&j| self.entries[j].pd <= m))
            .collect()
    }

    pub fn in_left_part(&self, i: usize) -> bool {
        self.left_part()[i]
    }
}

/// A basic tilting (or almost complete) module given by catalog indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TiltingRecord {
    pub id: String,
    pub summands: Vec<usize>,
    pub is_tilting: bool,
    /// Largest projective dimension among the summands.
    pub pd_bound: usize,
    pub faithful: bool,
}

impl TiltingRecord {
    pub fn from_indices(cat: &Catalog, mut summands: Vec<usize>) -> Result<Self> {
        summands.sort_unstable();
        summands.dedup();
        let exceptional = summands.iter().all(|&i| cat.is_exceptional(i))
            && summands
                .iter()
                .all(|&i| summands.iter().all(|&j| cat.compatible(i, j)));
        let is_tilting = exceptional && summands.len() == cat.algebra().vertex_count();
        let pd_bound = summands.iter().map(|&i| cat.entry(i).pd).max().unwrap_or(0);
        let faithful = !summands.is_empty() && is_faithful(&cat.direct_sum(&summands)?);
        Ok(TiltingRecord {
            id: cat.id_of(&summands),
            summands,
            is_tilting,
            pd_bound,
            faithful,
        })
    }

    /// Non-projective-injective summands.
    pub fn movable(&self, cat: &Catalog) -> Vec<usize> {
        self.summands
            .iter()
            .copied()
            .filter(|&i| !cat.entry(i).proj_inj)
            .collect()
    }
}

fn cliques_of_size(
    cands: &[usize],
    size: usize,
    ok: &(dyn Fn(usize, usize) -> bool + Sync),
) -> Vec<Vec<usize>> {
    fn extend(
        cands: &[usize],
        from: usize,
        cur: &mut Vec<usize>,
        size: usize,
        ok: &(dyn Fn(usize, usize) -> bool + Sync),
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for k in from..cands.len() {
            let x = cands[k];
            if cur.iter().all(|&y| ok(x, y)) {
                cur.push(x);
                extend(cands, k + 1, cur, size, ok, out);
                cur.pop();
            }
        }
    }
    if size == 0 {
        return vec![Vec::new()];
    }
    let per_start: Vec<Vec<Vec<usize>>> = par::map_range(cands.len(), |k| {
        let mut out = Vec::new();
        let mut cur = vec![cands[k]];
        extend(cands, k + 1, &mut cur, size, ok, &mut out);
        out
    });
    per_start.into_iter().flatten().collect()
}

/// Every indecomposable `A^(m)`-module (Dynkin quivers only).
pub fn enumerate_indecomposables(alg: &Arc<ScAlgebra>) -> Result<Vec<FDModule>> {
    Ok(Catalog::new(alg)?
        .entries
        .into_iter()
        .map(|e| e.module)
        .collect())
}

/// All basic tilting modules, optionally only those with `pd ≤ bound`.
/// Each contains every projective-injective, so only the remaining `n`
/// summands are searched.
pub fn enumerate_tilting(cat: &Catalog, pd_bound: Option<usize>) -> Result<Vec<TiltingRecord>> {
    let n = cat.model().algebra().vertex_count();
    let fixed = cat.projective_injectives();
    let cands: Vec<usize> = (0..cat.len())
        .filter(|&i| !cat.entry(i).proj_inj && cat.is_exceptional(i))
        .filter(|&i| pd_bound.is_none_or(|b| cat.entry(i).pd <= b))
        .collect();
    let ok = |a: usize, b: usize| cat.compatible(a, b);
    let cliques = cliques_of_size(&cands, n, &ok);
    let recs: Vec<Result<TiltingRecord>> = par::map(&cliques, |c| {
        let mut s = fixed.clone();
        s.extend_from_slice(c);
        TiltingRecord::from_indices(cat, s)
    });
    let mut out = recs.into_iter().collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.summands.cmp(&b.summands));
    Ok(out)
}

/// Faithful almost complete tilting modules obtained by dropping one movable
/// summand of the given tilting modules, without repetitions.
pub fn faithful_almost_complete(
    cat: &Catalog,
    tilting: &[TiltingRecord],
) -> Result<Vec<TiltingRecord>> {
    let mut seen = BTreeSet::new();
    let mut sets = Vec::new();
    for t in tilting {
        for x in t.movable(cat) {
            let rest: Vec<usize> = t.summands.iter().copied().filter(|&y| y != x).collect();
            if seen.insert(rest.clone()) {
                sets.push(rest);
            }
        }
    }
    let recs: Vec<Result<TiltingRecord>> =
        par::map(&sets, |s| TiltingRecord::from_indices(cat, s.clone()));
    Ok(recs
        .into_iter()
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|r| r.faithful)
        .collect())
}

/// A short exact sequence `0 → X_i → T_i → X_{i+1} → 0` with `T_i ∈ add T`.
#[derive(Clone, Debug)]
pub struct ConnectingSequence {
    pub f: ModMorphism,
    pub g: ModMorphism,
    /// Multiplicity of each summand of `T` in the middle term.
    pub middle: Vec<usize>,
}

impl ConnectingSequence {
    pub fn middle_term(&self) -> &FDModule {
        self.f.target()
    }

    /// `f` injective, `g` surjective, `im f = ker g`.
    pub fn is_exact(&self) -> Result<bool> {
        if !self.f.is_injective() || !self.g.is_surjective() || !self.f.then(&self.g)?.is_zero() {
            return Ok(false);
        }
        Ok(self.f.rank() + self.g.rank() == self.middle_term().dim())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Down,
}

/// One mutation step: the new complement and the connecting sequence.
#[derive(Clone, Debug)]
pub struct Mutation {
    pub complement: FDModule,
    pub sequence: ConnectingSequence,
}

/// Replaces the complement `x` of `T`: up via the cokernel of the minimal left
/// approximation, down via the kernel of the minimal right approximation.
pub fn mutate(t: &AddCategory, x: &FDModule, direction: Direction) -> Result<Mutation> {
    match direction {
        Direction::Up => {
            let f = minimal_left_approx(x, t)?;
            if !f.map.is_injective() {
                return Err(Error::SinkEnd);
            }
            let (c, g) = cokernel(&f.map)?;
            Ok(Mutation {
                complement: c,
                sequence: ConnectingSequence {
                    f: f.map,
                    g,
                    middle: f.multiplicities,
                },
            })
        }
        Direction::Down => {
            let g = minimal_right_approx(x, t)?;
            if !g.map.is_surjective() {
                return Err(Error::BongartzEnd);
            }
            let (k, f) = kernel(&g.map)?;
            Ok(Mutation {
                complement: k,
                sequence: ConnectingSequence {
                    f,
                    g: g.map,
                    middle: g.multiplicities,
                },
            })
        }
    }
}

/// Complements `X_0, …, X_t` of a faithful almost complete tilting module
/// with the connecting sequences between consecutive members.
#[derive(Clone, Debug)]
pub struct ComplementChain {
    pub base: AddCategory,
    pub complements: Vec<FDModule>,
    pub sequences: Vec<ConnectingSequence>,
    pub degrees: Vec<usize>,
}

impl ComplementChain {
    /// The chain parameter `t`: the index of the last complement.
    pub fn t(&self) -> usize {
        self.complements.len() - 1
    }
}

/// Walks from `hint` down to the Bongartz complement and then up to the sink
/// complement. `T` must be faithful and `T ⊕ hint` tilting.
pub fn complement_chain(t: &AddCategory, hint: &FDModule) -> Result<ComplementChain> {
    let win = degree_window(hint.algebra())?;
    complement_chain_in(t, hint, &win)
}

/// [`complement_chain`] with a caller-supplied degree window.
pub fn complement_chain_in(
    t: &AddCategory,
    hint: &FDModule,
    win: &HatWindow,
) -> Result<ComplementChain> {
    let chain = walk_complements(t, hint, win)?;
    let m = level_of(hint.algebra())?;
    if chain.t() < 2 * m || chain.t() > 2 * m + 1 {
        return Err(Error::ChainLength { t: chain.t(), m });
    }
    Ok(chain)
}

/// The mutation walk behind [`complement_chain_in`], without the bound on `t`.
pub fn walk_complements(
    t: &AddCategory,
    hint: &FDModule,
    win: &HatWindow,
) -> Result<ComplementChain> {
    let alg = hint.algebra();
    let m = level_of(alg)?;
    let tm = t.module()?;
    if !is_faithful(&tm) {
        return Err(Error::Precondition(
            "almost complete tilting module is not faithful".into(),
        ));
    }
    if t.len() + 1 != alg.vertex_count()
        || !is_indecomposable(hint)?
        || !is_exceptional(&tm.direct_sum(hint)?)?
    {
        return Err(Error::Precondition(
            "T ⊕ hint is not a basic tilting module".into(),
        ));
    }
    // gl.dim bounds the chain; anything longer is a bug
    let limit = 2 * m + 2;
    let mut x0 = hint.clone();
    for step in 0.. {
        if step > limit {
            return Err(Error::ChainLength { t: step, m });
        }
        match mutate(t, &x0, Direction::Down) {
            Ok(mu) => x0 = mu.complement,
            Err(Error::BongartzEnd) => break,
            Err(e) => return Err(e),
        }
    }
    let mut complements = vec![x0];
    let mut sequences = Vec::new();
    loop {
        if complements.len() > limit {
            return Err(Error::ChainLength {
                t: complements.len() - 1,
                m,
            });
        }
        match mutate(t, complements.last().unwrap(), Direction::Up) {
            Ok(mu) => {
                complements.push(mu.complement);
                sequences.push(mu.sequence);
            }
            Err(Error::SinkEnd) => break,
            Err(e) => return Err(e),
        }
    }
    let degrees = complements
        .iter()
        .map(|x| Ok(win.degree(x)?.0))
        .collect::<Result<Vec<_>>>()?;
    Ok(ComplementChain {
        base: t.clone(),
        complements,
        sequences,
        degrees,
    })
}

/// Chain of a catalog almost complete module, started from its first
/// brute-force complement and checked against the full complement set.
/// The bound on `t` is not enforced here so that callers can report it.
pub fn catalog_chain(cat: &Catalog, almost: &[usize]) -> Result<(ComplementChain, Vec<usize>)> {
    let brute = cat.complements(almost);
    let hint = *brute
        .first()
        .ok_or_else(|| Error::Internal("no complement found".into()))?;
    let add = cat.add_category(almost)?;
    let chain = walk_complements(&add, &cat.entry(hint).module, cat.window())?;
    let idx = crosscheck_chain(cat, &chain, &brute)?;
    Ok((chain, idx))
}

/// Catalog indices of the chain members; an error unless they are exactly
/// the brute-force complements.
pub fn crosscheck_chain(
    cat: &Catalog,
    chain: &ComplementChain,
    brute: &[usize],
) -> Result<Vec<usize>> {
    let idx = chain
        .complements
        .iter()
        .map(|x| cat.require_index(x))
        .collect::<Result<Vec<_>>>()?;
    let a: BTreeSet<usize> = idx.iter().copied().collect();
    let b: BTreeSet<usize> = brute.iter().copied().collect();
    if a != b || a.len() != idx.len() {
        return Err(Error::Internal(format!(
            "chain members {idx:?} differ from brute-force complements {brute:?}"
        )));
    }
    Ok(idx)
}

/// Outcome of [`mutation_team_check`].
#[derive(Clone, Debug, Default, Serialize)]
pub struct TeamReport {
    pub size: usize,
    pub degrees: Vec<usize>,
    pub pattern_violations: Vec<String>,
    pub ladder_violations: Vec<String>,
    /// `None` when no catalog was available.
    pub maximal: Option<bool>,
}

impl TeamReport {
    pub fn pass(&self) -> bool {
        self.pattern_violations.is_empty()
            && self.ladder_violations.is_empty()
            && self.maximal != Some(false)
    }
}

fn pattern_violations(
    ext: &dyn Fn(usize, usize, usize) -> usize,
    len: usize,
    top: usize,
) -> Vec<String> {
    let mut out = Vec::new();
    for j in 0..len {
        for i in 0..len {
            for s in 0..=top {
                let want = usize::from(i + s == j);
                let got = ext(s, j, i);
                if got != want {
                    out.push(format!(
                        "dim Ext^{s}(X_{j}, X_{i}) = {got}, expected {want}"
                    ));
                }
            }
        }
    }
    out
}

/// Degree ladder: `deg X_0 = 0`, steps in `{0, 1}`, at most two members per
/// degree, and `2m ≤ t ≤ 2m+1`.
pub fn ladder_violations(degrees: &[usize], m: usize) -> Vec<String> {
    let mut out = Vec::new();
    if degrees.first() != Some(&0) {
        out.push(format!("deg X_0 = {:?}, expected 0", degrees.first()));
    }
    for (i, w) in degrees.windows(2).enumerate() {
        if w[1] < w[0] || w[1] - w[0] > 1 {
            out.push(format!(
                "deg X_{} - deg X_{} = {} - {}",
                i + 1,
                i,
                w[1],
                w[0]
            ));
        }
    }
    let mut counts = std::collections::BTreeMap::new();
    for &d in degrees {
        *counts.entry(d).or_insert(0usize) += 1;
    }
    for (d, c) in counts {
        if c > 2 {
            out.push(format!("{c} members of degree {d}"));
        }
    }
    let t = degrees.len().saturating_sub(1);
    if t < 2 * m || t > 2 * m + 1 {
        out.push(format!("t = {t} outside [{}, {}]", 2 * m, 2 * m + 1));
    }
    out
}

/// Checks the Ext-dimension pattern `dim Ext^s(X_j, X_i) = [i+s = j]`, the
/// degree ladder, and (given a catalog) maximality of an ordered list.
pub fn mutation_team_check(modules: &[FDModule], cat: Option<&Catalog>) -> Result<TeamReport> {
    let Some(first) = modules.first() else {
        return Ok(TeamReport::default());
    };
    let alg = first.algebra();
    let m = level_of(alg)?;
    let top = 2 * m + 1;
    let table: Vec<Vec<Vec<usize>>> = modules
        .iter()
        .map(|x| {
            let res = ProjectiveResolution::new(x, Some(top + 1))?;
            modules
                .iter()
                .map(|y| res.ext_dims(y, top))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let pattern = pattern_violations(&|s, a, b| table[a][b][s], modules.len(), top);
    let degrees = match cat {
        Some(c) => modules
            .iter()
            .map(|x| Ok(c.window().degree(x)?.0))
            .collect::<Result<Vec<_>>>()?,
        None => {
            let win = degree_window(alg)?;
            modules
                .iter()
                .map(|x| Ok(win.degree(x)?.0))
                .collect::<Result<Vec<_>>>()?
        }
    };
    let ladder = ladder_violations(&degrees, m);
    let maximal = match cat {
        None => None,
        Some(c) => {
            let idx = modules
                .iter()
                .map(|x| c.require_index(x))
                .collect::<Result<Vec<_>>>()?;
            Some(!(0..c.len()).any(|y| {
                !idx.contains(&y)
                    && !c.entry(y).proj_inj
                    && (0..=idx.len()).any(|pos| {
                        let mut ext = idx.clone();
                        ext.insert(pos, y);
                        pattern_violations(&|s, a, b| c.ext(s, ext[a], ext[b]), ext.len(), top)
                            .is_empty()
                    })
            }))
        }
    };
    Ok(TeamReport {
        size: modules.len(),
        degrees,
        pattern_violations: pattern,
        ladder_violations: ladder,
        maximal,
    })
}

/// Searches for a faithful almost complete tilting module `W` with `W ⊕ X_i`
/// tilting for every member of `team` (catalog indices, ordered). The team
/// must lie in `L_m` and satisfy the Ext pattern.
pub fn find_mutation_witness(cat: &Catalog, team: &[usize]) -> Result<Option<TiltingRecord>> {
    let top = cat.top_degree();
    if !pattern_violations(&|s, a, b| cat.ext(s, team[a], team[b]), team.len(), top).is_empty() {
        return Err(Error::Precondition("team fails the Ext pattern".into()));
    }
    let left = cat.left_part();
    if team.iter().any(|&x| !left[x] || cat.entry(x).proj_inj) {
        return Err(Error::Precondition(
            "team members must be non-projective-injective and in L_m".into(),
        ));
    }
    search_witness(cat, team)
}

/// The search behind [`find_mutation_witness`], without its preconditions.
pub fn search_witness(cat: &Catalog, team: &[usize]) -> Result<Option<TiltingRecord>> {
    let n = cat.model().algebra().vertex_count();
    let cands: Vec<usize> = (0..cat.len())
        .filter(|&i| !cat.entry(i).proj_inj && cat.is_exceptional(i) && !team.contains(&i))
        .filter(|&i| team.iter().all(|&x| cat.compatible(i, x)))
        .collect();
    let ok = |a: usize, b: usize| cat.compatible(a, b);
    for c in cliques_of_size(&cands, n - 1, &ok) {
        let mut s = cat.projective_injectives();
        s.extend(c);
        let rec = TiltingRecord::from_indices(cat, s)?;
        if rec.faithful {
            return Ok(Some(rec));
        }
    }
    Ok(None)
}

/// Whether the Yoneda splice of the connecting sequences `i, …, i+s-1`
/// represents a nonzero class in `Ext^s(X_{i+s}, X_i)`. The class is read off
/// a lift of the identity of `X_{i+s}` to a chain map from its projective
/// resolution into the spliced sequence.
pub fn splice_class_nonzero(chain: &ComplementChain, i: usize, s: usize) -> Result<bool> {
    if s == 0 || i + s > chain.t() {
        return Err(Error::Precondition(format!(
            "no splice of length {s} from X_{i}"
        )));
    }
    let x_end = &chain.complements[i + s];
    let x_start = &chain.complements[i];
    let res = ProjectiveResolution::new(x_end, Some(s + 1))?;
    let seq = |k: usize| &chain.sequences[k];
    // E_k is the term receiving ψ_k; h_k: E_k → E_{k-1}.
    let term = |k: usize| -> &FDModule {
        if k == s {
            x_start
        } else {
            seq(i + s - 1 - k).f.target()
        }
    };
    let lift = |vecs: &[Vec<u32>], vs: &[usize], h: &ModMorphism| -> Result<Vec<u32>> {
        let mut out = Vec::new();
        for (vec, &v) in vecs.iter().zip(vs) {
            let blk = h.block(v);
            let w = blk
                .solve_linear(vec)?
                .ok_or_else(|| Error::Internal("splice lift does not exist".into()))?;
            out.extend(w);
        }
        Ok(out)
    };
    let split = |coords: &[u32], vs: &[usize], e: &FDModule| -> Vec<Vec<u32>> {
        let mut pos = 0;
        vs.iter()
            .map(|&v| {
                let d = e.vertex_dim(v);
                let piece = coords[pos..pos + d].to_vec();
                pos += d;
                piece
            })
            .collect()
    };
    let gens = top_generators(x_end);
    let vs0: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
    let eps: Vec<Vec<u32>> = gens.into_iter().map(|(_, vec)| vec).collect();
    let mut psi = lift(&eps, &vs0, &seq(i + s - 1).g)?;
    for k in 1..=s {
        let prev = term(k - 1);
        let cob = res.coboundary(prev, k);
        let image = FpMatrix::from_vec(1, cob.rows(), prev.prime(), psi.clone())?.mul(&cob);
        let h = if k == s {
            seq(i).f.clone()
        } else {
            let a = i + s - 1 - k;
            seq(a).g.then(&seq(a + 1).f)?
        };
        psi = lift(&split(image.row(0), res.term(k), prev), res.term(k), &h)?;
    }
    let boundaries = Subspace::span(&res.coboundary(x_start, s));
    Ok(!boundaries.contains(&psi))
}

/// `π` of a catalog entry, checked against the degree computed in the window.
pub fn pi_of_entry(cat: &Catalog, i: usize) -> Option<CmObject> {
    cat.entry(i).cm
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::replicated_algebra;
    use crate::linalg::DEFAULT_PRIME;
    use crate::module::{regular_module, simple};
    use crate::quiver::Quiver;

    fn cat(m: usize) -> Catalog {
        let a = replicated_algebra(&Quiver::linear_a(3), m, DEFAULT_PRIME).unwrap();
        Catalog::new(&a).unwrap()
    }

    #[test]
    fn recognition() {
        let a = replicated_algebra(&Quiver::linear_a(3), 1, DEFAULT_PRIME).unwrap();
        assert!(is_tilting(&regular_module(&a), 1).unwrap());
        let s = simple(&a, 0);
        assert!(is_exceptional(&s).unwrap());
        assert!(!is_tilting(&s, 1).unwrap());
    }

    #[test]
    fn catalog_of_duplicated_a3() {
        let c = cat(1);
        let pi = c.projective_injectives();
        assert_eq!(pi.len(), 3);
        assert!(pi.iter().all(|&i| c.entry(i).module.dim() == 4));
        for i in 0..c.len() {
            let x = &c.entry(i).module;
            assert!(is_indecomposable(x).unwrap());
            assert_eq!(c.index_of(x).unwrap(), Some(i));
            if let Some((l, _)) = c.entry(i).degree {
                assert_eq!(c.window().degree(x).unwrap().0, l);
            }
        }
        // the regular module decomposes into catalog entries
        for x in crate::decompose::decompose(&regular_module(c.algebra()), 5).unwrap() {
            assert!(c.index_of(&x).unwrap().is_some());
        }
    }

    #[test]
    fn tilting_counts_match_cluster_counts() {
        for (m, want) in [(1, 14), (2, 55)] {
            let c = cat(m);
            let all = enumerate_tilting(&c, Some(m)).unwrap();
            assert_eq!(all.len(), want);
            assert!(all.iter().all(|t| t.is_tilting && t.faithful));
        }
    }

    #[test]
    fn chains_and_mutation() {
        let c = cat(1);
        let tilting = enumerate_tilting(&c, None).unwrap();
        let almost = faithful_almost_complete(&c, &tilting).unwrap();
        assert!(!almost.is_empty());
        for a in almost.iter().take(6) {
            let (chain, _) = catalog_chain(&c, &a.summands).unwrap();
            for seq in &chain.sequences {
                assert!(seq.is_exact().unwrap());
            }
            let last = chain.complements.last().unwrap();
            assert!(matches!(
                mutate(&chain.base, last, Direction::Up),
                Err(Error::SinkEnd)
            ));
            assert!(matches!(
                mutate(&chain.base, &chain.complements[0], Direction::Down),
                Err(Error::BongartzEnd)
            ));
            let up = mutate(&chain.base, &chain.complements[0], Direction::Up).unwrap();
            let down = mutate(&chain.base, &up.complement, Direction::Down).unwrap();
            assert!(is_isomorphic(&down.complement, &chain.complements[0]).unwrap());
            for s in 1..=chain.t() {
                assert!(splice_class_nonzero(&chain, 0, s).unwrap());
            }
        }
    }

    #[test]
    fn left_part_contains_layer_zero_projectives() {
        let c = cat(1);
        let left = c.left_part();
        for (i, &inside) in left.iter().enumerate() {
            if c.entry(i).pd > 1 {
                assert!(!inside);
            }
        }
        let a = c.algebra();
        let p = c
            .index_of(&projective(a, vertex_index(a, 2, 0)))
            .unwrap()
            .unwrap();
        assert!(left[p]);
    }
}

//! Verification suites over all faithful almost complete tilting modules of
//! a representation-finite `A^(m)`, and the AR-angle report.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{replicated_algebra, ScAlgebra};
use crate::approx::{minimal_left_approx, minimal_right_approx};
use crate::cluster::{ClusterCategory, CmObject, DbStalk};
use crate::decompose::is_isomorphic;
use crate::error::{Error, Result};
use crate::homology::{global_dimension, hom_dim};
use crate::module::{kernel, FDModule};
use crate::par;
use crate::quiver::Quiver;
use crate::repetitive::HatWindow;
use crate::tilting::{
    catalog_chain, enumerate_tilting, faithful_almost_complete, find_mutation_witness,
    search_witness, splice_class_nonzero, Catalog, ComplementChain, TiltingRecord,
};

/// Pass/fail tally of one named check with a witness line per failure.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct CheckSummary {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub witnesses: Vec<String>,
}

impl CheckSummary {
    pub fn pass(&self) -> bool {
        self.failed == 0
    }
}

/// Result of one verification target.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    pub target: String,
    pub quiver: String,
    pub m: usize,
    pub prime: u32,
    pub instances: usize,
    pub checks: Vec<CheckSummary>,
    pub observations: BTreeMap<String, String>,
}

impl Report {
    fn new(target: &str, ctx: &Context) -> Self {
        Report {
            target: target.into(),
            quiver: ctx.quiver.clone(),
            m: ctx.m,
            prime: ctx.prime,
            instances: 0,
            checks: Vec::new(),
            observations: BTreeMap::new(),
        }
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass())
    }

    pub fn check(&self, name: &str) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn record(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        let idx = match self.checks.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                self.checks.push(CheckSummary {
                    name: name.into(),
                    ..Default::default()
                });
                self.checks.len() - 1
            }
        };
        let c = &mut self.checks[idx];
        if ok {
            c.passed += 1;
        } else {
            c.failed += 1;
            c.witnesses.push(witness());
        }
    }

    fn observe(&mut self, key: &str, value: impl ToString) {
        self.observations.insert(key.into(), value.to_string());
    }
}

/// A computed complement chain of a faithful almost complete module.
#[derive(Clone, Debug)]
pub struct ChainData {
    pub almost: TiltingRecord,
    pub chain: ComplementChain,
    /// Catalog indices of `X_0, …, X_t`.
    pub members: Vec<usize>,
}

/// Everything the suites share: catalog, cluster category, tilting modules
/// and the chains of all faithful almost complete tilting modules.
pub struct Context {
    pub quiver: String,
    pub m: usize,
    pub prime: u32,
    pub cat: Catalog,
    pub cluster: ClusterCategory,
    pub tilting: Vec<TiltingRecord>,
    pub almost: Vec<TiltingRecord>,
    pub chains: Vec<ChainData>,
    /// `(instance, error)` for chains that could not be built.
    pub chain_errors: Vec<(String, String)>,
}

impl Context {
    pub fn new(quiver: &Quiver, m: usize, prime: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::Precondition("verification needs m ≥ 1".into()));
        }
        let alg = replicated_algebra(quiver, m, prime)?;
        Context::for_algebra(&alg)
    }

    pub fn for_algebra(alg: &Arc<ScAlgebra>) -> Result<Self> {
        let info = alg
            .replicated()
            .ok_or_else(|| Error::Precondition("not a replicated algebra".into()))?;
        let m = info.level;
        let quiver = info.quiver.name().to_string();
        let cat = Catalog::new(alg)?;
        let cluster = ClusterCategory::new(cat.model().clone(), m)?;
        let tilting = enumerate_tilting(&cat, None)?;
        let almost = faithful_almost_complete(&cat, &tilting)?;
        let built: Vec<Result<(ComplementChain, Vec<usize>)>> =
            par::map(&almost, |a| catalog_chain(&cat, &a.summands));
        let mut chains = Vec::new();
        let mut chain_errors = Vec::new();
        for (a, r) in almost.iter().zip(built) {
            match r {
                Ok((chain, members)) => chains.push(ChainData {
                    almost: a.clone(),
                    chain,
                    members,
                }),
                Err(e) => chain_errors.push((instance(&quiver, m, a), e.to_string())),
            }
        }
        Ok(Context {
            quiver,
            m,
            prime: alg.prime(),
            cat,
            cluster,
            tilting,
            almost,
            chains,
            chain_errors,
        })
    }

    /// Chains whose almost complete module has `pd ≤ m`.
    pub fn pd_chains(&self) -> impl Iterator<Item = &ChainData> {
        self.chains
            .iter()
            .filter(move |c| c.almost.pd_bound <= self.m)
    }

    fn instance(&self, c: &ChainData) -> String {
        instance(&self.quiver, self.m, &c.almost)
    }

    fn pi(&self, idx: usize) -> Option<CmObject> {
        self.cat.entry(idx).cm
    }

    fn cm_index(&self, idx: usize) -> Option<usize> {
        self.pi(idx).and_then(|o| self.cluster.index(o))
    }
}

fn instance(quiver: &str, m: usize, a: &TiltingRecord) -> String {
    format!("{quiver} m={m} T={} summands={:?}", a.id, a.summands)
}

fn chain_check(r: &mut Report, ctx: &Context) {
    for (inst, err) in &ctx.chain_errors {
        r.record("chain construction", false, || format!("{inst}: {err}"));
    }
    for _ in &ctx.chains {
        r.record("chain construction", true, String::new);
    }
}

/// Ext-dimension pattern of chains, `End(X_i) = k`, `Hom(X_j, X_i) = 0` for
/// `j > i`, and nonvanishing of spliced connecting sequences.
pub fn thm34(ctx: &Context) -> Result<Report> {
    let mut r = Report::new("thm34", ctx);
    chain_check(&mut r, ctx);
    let top = ctx.cat.top_degree();
    let splices: Vec<Result<Vec<(usize, usize, bool)>>> = par::map(&ctx.chains, |c| {
        let mut out = Vec::new();
        for i in 0..c.chain.t() {
            for s in 1..=c.chain.t() - i {
                out.push((i, s, splice_class_nonzero(&c.chain, i, s)?));
            }
        }
        Ok(out)
    });
    let mut by_degree = BTreeMap::new();
    for (c, spl) in ctx.chains.iter().zip(splices) {
        r.instances += 1;
        let inst = ctx.instance(c);
        let x = &c.members;
        for j in 0..x.len() {
            for i in 0..x.len() {
                for s in 0..=top {
                    let got = ctx.cat.ext(s, x[j], x[i]);
                    let want = usize::from(i + s == j);
                    r.record("ext pattern", got == want, || {
                        format!("{inst}: dim Ext^{s}(X_{j}, X_{i}) = {got}, expected {want}")
                    });
                    if j >= i {
                        r.record("ext pattern (j >= i)", got == want, || {
                            format!("{inst}: dim Ext^{s}(X_{j}, X_{i}) = {got}, expected {want}")
                        });
                    } else if got != 0 {
                        *by_degree.entry(s).or_insert(0usize) += 1;
                    }
                }
                if j > i {
                    let h = ctx.cat.hom(x[j], x[i]);
                    r.record("hom vanishing j > i", h == 0, || {
                        format!("{inst}: dim Hom(X_{j}, X_{i}) = {h}")
                    });
                }
            }
            let e = ctx.cat.hom(x[j], x[j]);
            r.record("End(X_i) = k", e == 1, || {
                format!("{inst}: dim End(X_{j}) = {e}")
            });
        }
        for (i, s, nz) in spl? {
            r.record("splice nonzero", nz, || {
                format!("{inst}: splice X_{i}..X_{} has zero class", i + s)
            });
        }
    }
    r.observe(
        "nonzero Ext^s(X_j, X_i) with j < i, by s",
        format!("{by_degree:?}"),
    );
    Ok(r)
}

/// Degree ladder of every chain, the range of `t`, and the count of
/// complements with `pd ≤ m`.
pub fn lemma37(ctx: &Context) -> Result<Report> {
    let mut r = Report::new("lemma37", ctx);
    chain_check(&mut r, ctx);
    let m = ctx.m;
    let mut t_hist: BTreeMap<usize, usize> = BTreeMap::new();
    let mut t_hist_pd: BTreeMap<usize, usize> = BTreeMap::new();
    for c in &ctx.chains {
        r.instances += 1;
        let inst = ctx.instance(c);
        let d = &c.chain.degrees;
        r.record("deg X_0 = 0", d.first() == Some(&0), || {
            format!("{inst}: degrees {d:?}")
        });
        let steps = d.windows(2).all(|w| w[1] >= w[0] && w[1] - w[0] <= 1);
        r.record("degree steps in {0,1}", steps, || {
            format!("{inst}: degrees {d:?}")
        });
        let mut per: BTreeMap<usize, usize> = BTreeMap::new();
        for &x in d {
            *per.entry(x).or_default() += 1;
        }
        r.record(
            "at most two per degree",
            per.values().all(|&k| k <= 2),
            || format!("{inst}: degrees {d:?}"),
        );
        let t = c.chain.t();
        *t_hist.entry(t).or_default() += 1;
        r.record("2m <= t <= 2m+1", (2 * m..=2 * m + 1).contains(&t), || {
            format!("{inst}: t = {t}")
        });
        let npd = c
            .members
            .iter()
            .filter(|&&x| ctx.cat.entry(x).pd <= m)
            .count();
        r.record("m+1 complements of pd <= m", npd == m + 1, || {
            format!("{inst}: {npd} complements of pd ≤ {m} among {}", t + 1)
        });
        if c.almost.pd_bound <= m {
            *t_hist_pd.entry(t).or_default() += 1;
            r.record(
                "m+1 complements of pd <= m (pd T <= m)",
                npd == m + 1,
                || format!("{inst}: {npd} complements of pd ≤ {m} among {}", t + 1),
            );
        }
    }
    r.observe("t distribution", format!("{t_hist:?}"));
    r.observe("t distribution (pd T <= m)", format!("{t_hist_pd:?}"));
    Ok(r)
}

/// Members of each chain inside the left part `L_m`: an initial segment
/// `X_0, …, X_l` with `m-1 ≤ l ≤ m`.
pub fn cor38(ctx: &Context) -> Result<Report> {
    let mut r = Report::new("cor38", ctx);
    chain_check(&mut r, ctx);
    let left = ctx.cat.left_part();
    let m = ctx.m;
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for c in &ctx.chains {
        r.instances += 1;
        let inst = ctx.instance(c);
        let inside: Vec<bool> = c.members.iter().map(|&x| left[x]).collect();
        let k = inside.iter().filter(|&&b| b).count();
        *hist.entry(k).or_default() += 1;
        r.record(
            "|team ∩ L_m| = l+1, m-1 <= l <= m",
            k == m || k == m + 1,
            || format!("{inst}: {k} members in L_m, pattern {inside:?}"),
        );
        let prefix = inside.iter().skip_while(|&&b| b).all(|&b| !b);
        r.record("L_m members form an initial segment", prefix, || {
            format!("{inst}: pattern {inside:?}")
        });
    }
    r.observe("members in L_m", format!("{hist:?}"));
    Ok(r)
}

/// Ext transfer to the cluster category on `pd ≤ m` chains (`i ≤ j`), and
/// the mutation witness for each team of `m+1` chain members inside `L_m`.
pub fn thm39(ctx: &Context) -> Result<Report> {
    let mut r = Report::new("thm39", ctx);
    chain_check(&mut r, ctx);
    let m = ctx.m;
    for c in ctx.pd_chains() {
        r.instances += 1;
        let inst = ctx.instance(c);
        let x: Vec<usize> = c
            .members
            .iter()
            .copied()
            .filter(|&i| ctx.cat.entry(i).pd <= m)
            .collect();
        for j in 0..x.len() {
            for i in 0..=j {
                let (Some(pj), Some(pi)) = (ctx.pi(x[j]), ctx.pi(x[i])) else {
                    r.record("pi defined", false, || {
                        format!("{inst}: π vanishes on a chain member")
                    });
                    continue;
                };
                for l in 1..=m {
                    let a = ctx.cat.ext(l, x[j], x[i]);
                    let b = ctx.cluster.model().ext_cm(l, pj, pi, m)?;
                    r.record("ext transfer", a == b, || {
                        format!("{inst}: Ext^{l}(X_{j}, X_{i}) = {a} but Ext^{l}_C(πX_{j}, πX_{i}) = {b}")
                    });
                }
            }
        }
    }
    let left = ctx.cat.left_part();
    let mut teams = BTreeSet::new();
    for c in &ctx.chains {
        let team: Vec<usize> = c.members.iter().copied().filter(|&x| left[x]).collect();
        if team.len() == m + 1 {
            teams.insert(team);
        }
    }
    let teams: Vec<Vec<usize>> = teams.into_iter().collect();
    let found: Vec<Result<Option<TiltingRecord>>> =
        par::map(&teams, |t| find_mutation_witness(&ctx.cat, t));
    let unchecked: Vec<Result<Option<TiltingRecord>>> =
        par::map(&teams, |t| search_witness(&ctx.cat, t));
    for (team, w) in teams.iter().zip(unchecked) {
        let label = format!("{} m={m} team={team:?}", ctx.quiver);
        let w = w?;
        r.record("witness exists (no team precondition)", w.is_some(), || {
            format!("{label}: none")
        });
        if let Some(w) = w {
            let pt: Vec<usize> = w
                .movable(&ctx.cat)
                .iter()
                .filter_map(|&y| ctx.cm_index(y))
                .collect();
            let mut comps = ctx.cluster.complements(&pt);
            comps.sort_unstable();
            let mut pteam: Vec<usize> = team.iter().filter_map(|&y| ctx.cm_index(y)).collect();
            pteam.sort_unstable();
            r.record("exchange team", comps == pteam, || {
                format!("{label}: complements of πW {comps:?} vs πX {pteam:?}")
            });
        }
    }
    for (team, w) in teams.iter().zip(found) {
        let label = format!("{} m={m} team={team:?}", ctx.quiver);
        match w {
            Ok(w) => r.record("witness found", w.is_some(), || {
                format!("{label}: search space exhausted")
            }),
            Err(e) => r.record("witness found", false, || format!("{label}: {e}")),
        }
    }
    r.observe("teams", teams.len());
    Ok(r)
}

/// One entry of an [`ArAngleReport`].
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AngleCheck {
    pub name: String,
    pub pass: bool,
    pub witness_dims: Vec<Vec<usize>>,
}

/// Dimension-level check that the `pd ≤ m` part of a chain is an AR
/// `(m+3)`-angle in the cluster category.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ArAngleReport {
    pub checks: Vec<AngleCheck>,
    /// Whether `π X_{m+1} ≅ π X_0`, when the chain continues past `X_m`.
    pub wrap_continuation: Option<bool>,
}

impl ArAngleReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Checks (a) complements, (b) consecutive and wrap-around `Ext¹ = 1`,
/// (c) middle terms in `add πT`, (d) minimality of the connecting maps, and
/// reports the exploratory continuation (e). `members` are catalog indices
/// of the chain in the given order.
pub fn ar_angle(
    ctx: &Context,
    almost: &TiltingRecord,
    chain: &ComplementChain,
    members: &[usize],
) -> Result<ArAngleReport> {
    let m = ctx.m;
    if members.len() < m + 1 || chain.sequences.len() < m {
        return Err(Error::Precondition(
            "chain has fewer than m+1 members".into(),
        ));
    }
    let x = &members[..=m];
    let dims = |i: usize| ctx.cat.entry(i).module.dims().to_vec();
    let mut checks = Vec::new();

    let pt: Vec<usize> = almost
        .movable(&ctx.cat)
        .iter()
        .filter_map(|&y| ctx.cm_index(y))
        .collect();
    let px: Vec<Option<usize>> = x.iter().map(|&i| ctx.cm_index(i)).collect();
    let mut comps = ctx.cluster.complements(&pt);
    comps.sort_unstable();
    let mut got: Vec<usize> = px.iter().flatten().copied().collect();
    got.sort_unstable();
    checks.push(AngleCheck {
        name: "a: complements of πT".into(),
        pass: px.iter().all(|p| p.is_some()) && got == comps,
        witness_dims: x.iter().map(|&i| dims(i)).collect(),
    });

    let mut ok = true;
    let mut wit = Vec::new();
    for i in 0..=m {
        let (a, b) = (x[(i + 1) % (m + 1)], x[i]);
        let (Some(pa), Some(pb)) = (ctx.pi(a), ctx.pi(b)) else {
            ok = false;
            continue;
        };
        if ctx.cluster.model().ext_cm(1, pa, pb, m)? != 1 {
            ok = false;
            wit.push(dims(a));
            wit.push(dims(b));
        }
    }
    checks.push(AngleCheck {
        name: "b: consecutive Ext^1 = 1".into(),
        pass: ok,
        witness_dims: wit,
    });

    let base: Vec<usize> = almost.summands.clone();
    let pt_set: BTreeSet<usize> = pt.iter().copied().collect();
    let model = ctx.cluster.model();
    let (mut inside_ok, mut nonzero_ok, mut zero_ok) = (true, true, true);
    let (mut inside_wit, mut nonzero_wit, mut zero_wit) = (Vec::new(), Vec::new(), Vec::new());
    for (i, seq) in chain.sequences[..m].iter().enumerate() {
        let parts: Vec<usize> = seq
            .middle
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(j, _)| base[j])
            .collect();
        let images: Vec<Option<usize>> = parts.iter().map(|&y| ctx.cm_index(y)).collect();
        let dims_mid = seq.middle_term().dims().to_vec();
        if !images.iter().flatten().all(|p| pt_set.contains(p)) {
            inside_ok = false;
            inside_wit.push(dims_mid.clone());
        }
        if images.iter().all(|p| p.is_none()) {
            nonzero_ok = false;
            nonzero_wit.push(dims_mid);
            // a zero middle term forces πX_{i+1} ≅ πX_i[1] and Hom(πX_i, πT) = 0
            let consistent = match (ctx.pi(x[i]), ctx.pi(x[i + 1])) {
                (Some(a), Some(b)) => {
                    let shifted = model.cm_normalize(
                        DbStalk {
                            module: a.0.module,
                            shift: a.0.shift + 1,
                        },
                        m,
                    )?;
                    let mut no_maps = true;
                    for &y in &pt {
                        no_maps &= model.ext_cm(0, a, ctx.cluster.objects()[y], m)? == 0;
                    }
                    shifted == b && no_maps
                }
                _ => false,
            };
            if !consistent {
                zero_ok = false;
                zero_wit.push(dims(x[i]));
            }
        }
    }
    checks.push(AngleCheck {
        name: "c: πT_i in add πT".into(),
        pass: inside_ok,
        witness_dims: inside_wit,
    });
    checks.push(AngleCheck {
        name: "c: πT_i nonzero".into(),
        pass: nonzero_ok,
        witness_dims: nonzero_wit,
    });
    checks.push(AngleCheck {
        name: "c: zero πT_i gives πX_{i+1} = πX_i[1]".into(),
        pass: zero_ok,
        witness_dims: zero_wit,
    });

    let mut ok = true;
    let mut wit = Vec::new();
    for (i, seq) in chain.sequences[..m].iter().enumerate() {
        let left = minimal_left_approx(&chain.complements[i], &chain.base)?;
        let right = minimal_right_approx(&chain.complements[i + 1], &chain.base)?;
        let kern = kernel(&right.map)?.0;
        let good = left.multiplicities == seq.middle
            && right.multiplicities == seq.middle
            && is_isomorphic(&kern, &chain.complements[i])?;
        if !good {
            ok = false;
            wit.push(seq.middle_term().dims().to_vec());
        }
    }
    checks.push(AngleCheck {
        name: "d: minimal approximations".into(),
        pass: ok,
        witness_dims: wit,
    });

    let wrap_continuation = members.get(m + 1).map(|&y| ctx.pi(y) == ctx.pi(x[0]));
    Ok(ArAngleReport {
        checks,
        wrap_continuation,
    })
}

/// [`ar_angle`] over every `pd ≤ m` chain.
pub fn thm42(ctx: &Context) -> Result<Report> {
    let mut r = Report::new("thm42", ctx);
    chain_check(&mut r, ctx);
    let chains: Vec<&ChainData> = ctx.pd_chains().collect();
    let reports: Vec<Result<ArAngleReport>> =
        par::map(&chains, |c| ar_angle(ctx, &c.almost, &c.chain, &c.members));
    let mut wrap = BTreeMap::new();
    for (c, rep) in chains.iter().zip(reports) {
        r.instances += 1;
        let inst = ctx.instance(c);
        let rep = rep?;
        for chk in &rep.checks {
            r.record(&chk.name, chk.pass, || {
                format!("{inst}: witness dims {:?}", chk.witness_dims)
            });
        }
        let key = match rep.wrap_continuation {
            None => "no X_{m+1}",
            Some(true) => "π X_{m+1} = π X_0",
            Some(false) => "π X_{m+1} ≠ π X_0",
        };
        *wrap.entry(key).or_insert(0usize) += 1;
    }
    r.observe("e: continuation past X_m", format!("{wrap:?}"));
    Ok(r)
}

/// Resolution-based `Ext^s` over `Â` against `stable Hom(X, Ω^{-s} Y)` for
/// `pairs` random pairs of modules and `1 ≤ s ≤ 3`.
pub fn lemma31(ctx: &Context, pairs: usize, seed: u64) -> Result<Report> {
    let mut r = Report::new("lemma31", ctx);
    let alg = ctx.cat.algebra();
    let win = HatWindow::new(alg, 6, 6)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = ctx.cat.len();
    let pick = |rng: &mut ChaCha8Rng| -> Result<(Vec<usize>, FDModule)> {
        let k = if rng.gen_range(0..3) == 0 { 2 } else { 1 };
        let idx: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
        let x = ctx.cat.direct_sum(&idx)?;
        Ok((idx, x))
    };
    let mut jobs = Vec::with_capacity(pairs);
    for _ in 0..pairs {
        let (ix, x) = pick(&mut rng)?;
        let (iy, y) = pick(&mut rng)?;
        jobs.push((ix, x, iy, y));
    }
    let results: Vec<Result<Vec<(usize, usize, usize)>>> = par::map(&jobs, |(_, x, _, y)| {
        let (lx, ly) = (win.lift(x)?, win.lift(y)?);
        (1..=3)
            .map(|s| {
                let e = win.ext_dim(s, &lx, &ly)?;
                let shifted = win.omega(&ly, -(s as i64))?;
                Ok((s, e, win.stable_hom_dim(&lx, &shifted)?))
            })
            .collect()
    });
    for ((ix, _, iy, _), res) in jobs.iter().zip(results) {
        r.instances += 1;
        for (s, e, h) in res? {
            r.record("ext = stable hom", e == h, || {
                format!(
                    "{} m={} X={ix:?} Y={iy:?}: Ext^{s} = {e}, stable Hom = {h}",
                    ctx.quiver, ctx.m
                )
            });
        }
    }
    Ok(r)
}

/// `gl.dim A^(m) = 2m+1`, computed from the simples.
pub fn gldim(ctx: &Context) -> Result<Report> {
    let mut r = Report::new("gldim", ctx);
    let g = global_dimension(ctx.cat.algebra())?;
    r.instances = 1;
    r.record("gl.dim = 2m+1", g == 2 * ctx.m + 1, || {
        format!("{} m={}: gl.dim = {g}", ctx.quiver, ctx.m)
    });
    r.observe("gl.dim", g);
    Ok(r)
}

/// `pd ≤ m` tilting modules against `m`-cluster tilting objects: equal
/// counts, and `π` on summand sets is a bijection.
pub fn bijection(ctx: &Context) -> Result<Report> {
    let mut r = Report::new("bijection", ctx);
    let modules = enumerate_tilting(&ctx.cat, Some(ctx.m))?;
    let objects = ctx.cluster.cluster_tilting_objects();
    r.instances = modules.len();
    r.record("counts agree", modules.len() == objects.len(), || {
        format!(
            "{} m={}: {} tilting modules, {} cluster tilting objects",
            ctx.quiver,
            ctx.m,
            modules.len(),
            objects.len()
        )
    });
    let targets: BTreeSet<Vec<usize>> = objects.iter().cloned().collect();
    let mut images = BTreeSet::new();
    for t in &modules {
        let mut img: Vec<usize> = t
            .movable(&ctx.cat)
            .iter()
            .filter_map(|&y| ctx.cm_index(y))
            .collect();
        img.sort_unstable();
        r.record("π T is cluster tilting", targets.contains(&img), || {
            format!("{}: π T = {img:?}", t.id)
        });
        images.insert(img);
    }
    r.record("π injective", images.len() == modules.len(), || {
        format!("{} distinct images", images.len())
    });
    r.record("π surjective", images == targets, || {
        format!("{} of {} objects hit", images.len(), targets.len())
    });
    r.observe("tilting modules (pd <= m)", modules.len());
    r.observe("cluster tilting objects", objects.len());
    Ok(r)
}

/// A verification target by name.
pub fn run_target(ctx: &Context, target: &str, seed: u64) -> Result<Report> {
    match target {
        "thm34" => thm34(ctx),
        "lemma37" => lemma37(ctx),
        "cor38" => cor38(ctx),
        "thm39" => thm39(ctx),
        "thm42" => thm42(ctx),
        "lemma31" => lemma31(ctx, 60, seed),
        "gldim" => gldim(ctx),
        "bijection" => bijection(ctx),
        other => Err(Error::Precondition(format!(
            "unknown verification target {other}"
        ))),
    }
}

pub const TARGETS: [&str; 8] = [
    "thm34",
    "lemma37",
    "cor38",
    "thm39",
    "thm42",
    "lemma31",
    "gldim",
    "bijection",
];

/// Dimension of `Hom(X, Y)` for a pair of catalog entries, recomputed from
/// the modules; used to cross-check the cached tables.
pub fn recompute_hom(ctx: &Context, i: usize, j: usize) -> Result<usize> {
    hom_dim(&ctx.cat.entry(i).module, &ctx.cat.entry(j).module)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::DEFAULT_PRIME;

    #[test]
    fn ar_angle_detects_misordered_chain() {
        let ctx = Context::new(&Quiver::linear_a(3), 1, DEFAULT_PRIME).unwrap();
        let c = ctx
            .pd_chains()
            .find(|c| c.chain.t() >= 2)
            .expect("a chain with three members");
        let rep = ar_angle(&ctx, &c.almost, &c.chain, &c.members).unwrap();
        assert!(rep.pass(), "{rep:?}");
        let mut swapped = c.members.clone();
        swapped.swap(0, 1);
        swapped.swap(1, 2);
        let bad = ar_angle(&ctx, &c.almost, &c.chain, &swapped).unwrap();
        assert!(!bad.checks[1].pass || !bad.checks[0].pass);
        for i in 0..ctx.cat.len().min(5) {
            assert_eq!(recompute_hom(&ctx, i, i).unwrap(), ctx.cat.hom(i, i));
        }
    }
}

//! Exhaustive and randomized sweeps over the classification, run either
//! sequentially or on the rayon thread pool.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::bundle::BundleClass;
use crate::classify::{
    elementary_transform, enumerate_classes, normalize, realize, same_deformation_class, topological_type,
    DeformationClass, Quintuple, SurfaceRecipe, TransformSite,
};
use crate::curve::{canonical_partitions, CurveType, JacComponent};
use crate::error::Result;
use crate::surface::RealStructureTag;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential execution without the `parallel` feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Maps `f` over `items`, keeping input order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }
}

/// Every allowable quintuple with `1 <= g <= max_g`, in lexicographic order
/// of `(g, mu, eps, t, k)`.
pub fn allowable_quintuples(max_g: u32) -> Vec<Quintuple> {
    let mut out = Vec::new();
    for g in 1..=max_g {
        for ct in CurveType::all_of_genus(g) {
            let mu = i64::from(ct.real_components());
            for t in 0..=mu {
                for k in 0..=mu - t {
                    out.push(Quintuple::new(t, k, g.into(), mu, ct.eps().into()));
                }
            }
        }
    }
    out
}

/// Inputs of `realize`: each allowable quintuple, once per spin flag when
/// `mu = 0`.
pub fn realization_cases(max_g: u32) -> Vec<(Quintuple, Option<bool>)> {
    allowable_quintuples(max_g)
        .into_iter()
        .flat_map(|q| {
            let spins: &[Option<bool>] = if q.mu == 0 {
                &[Some(false), Some(true)]
            } else {
                &[None]
            };
            spins.iter().map(move |s| (q, *s))
        })
        .collect()
}

fn round_trip(q: &Quintuple, spin: Option<bool>) -> Result<Option<String>> {
    let r = realize(q, spin)?;
    let back = topological_type(&r)?;
    if back != *q {
        return Ok(Some(format!("{q}: topological type {back}")));
    }
    let class = normalize(&r)?;
    if class != DeformationClass::new(*q, spin)? {
        return Ok(Some(format!("{q} spin {spin:?}: normal form {class}")));
    }
    Ok(None)
}

/// Cases where `realize` fails or does not round-trip, described.
pub fn round_trip_failures(max_g: u32, exec: Execution) -> Vec<String> {
    let cases = realization_cases(max_g);
    exec.map(&cases, |(q, spin)| match round_trip(q, *spin) {
        Ok(f) => f,
        Err(e) => Some(format!("{q} spin {spin:?}: {e}")),
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Curve types of genus `1..=max_g` whose class count differs from
/// `(mu+1)(mu+2)/2`, or 2 when `mu = 0`.
pub fn class_count_failures(max_g: u32, exec: Execution) -> Vec<String> {
    let curves: Vec<CurveType> = (1..=max_g).flat_map(CurveType::all_of_genus).collect();
    exec.map(&curves, |ct| {
        let mu = u64::from(ct.real_components());
        let expected = if mu == 0 { 2 } else { (mu + 1) * (mu + 2) / 2 };
        match enumerate_classes(ct) {
            Ok(c) if c.len() as u64 == expected => None,
            Ok(c) => Some(format!("{ct}: {} classes, expected {expected}", c.len())),
            Err(e) => Some(format!("{ct}: {e}")),
        }
    })
    .into_iter()
    .flatten()
    .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveConfig {
    pub trials: usize,
    pub max_moves: usize,
    pub max_g: u32,
    pub max_mu: u32,
    pub seed: u64,
}

impl Default for MoveConfig {
    fn default() -> Self {
        MoveConfig {
            trials: 1000,
            max_moves: 20,
            max_g: 4,
            max_mu: 4,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MoveReport {
    pub trials: usize,
    pub moves: usize,
    /// Moves that flipped one component between torus and Klein bottle.
    pub flips: usize,
    pub cancellation_checks: usize,
    pub neutrality_checks: usize,
    pub failures: Vec<String>,
}

impl MoveReport {
    fn absorb(&mut self, other: MoveReport) {
        self.trials += other.trials;
        self.moves += other.moves;
        self.flips += other.flips;
        self.cancellation_checks += other.cancellation_checks;
        self.neutrality_checks += other.neutrality_checks;
        self.failures.extend(other.failures);
    }
}

/// A random starting recipe: a realized class, a `direct_sum` model, or a
/// `c+`/`c-` model over a random partition.
pub fn random_recipe(rng: &mut impl Rng, max_g: u32, max_mu: u32) -> Result<SurfaceRecipe> {
    let curves: Vec<CurveType> = (1..=max_g)
        .flat_map(CurveType::all_of_genus)
        .filter(|c| c.real_components() <= max_mu)
        .collect();
    let ct = *curves.choose(rng).expect("genus 1 has curve types");
    let mu = ct.real_components();
    match rng.gen_range(0..3) {
        0 => {
            let t = rng.gen_range(0..=mu);
            let k = rng.gen_range(0..=mu - t);
            let q = Quintuple::new(t.into(), k.into(), ct.genus().into(), mu.into(), ct.eps().into());
            let spin = (mu == 0).then(|| rng.gen());
            realize(&q, spin)
        }
        1 => SurfaceRecipe::new(ct, BundleClass::trivial(&ct), RealStructureTag::DirectSum, Vec::new()),
        _ => {
            let component = if mu == 0 {
                JacComponent::trivial_for(&ct)
            } else {
                let parts = canonical_partitions(mu)?;
                JacComponent::Partition(parts.choose(rng).expect("mu >= 1").clone())
            };
            let tag = if rng.gen() {
                RealStructureTag::CPlus
            } else {
                RealStructureTag::CMinus
            };
            SurfaceRecipe::new(ct, BundleClass::anti_real(component), tag, Vec::new())
        }
    }
}

fn predicted(start: &DeformationClass, klein: &[bool], real: &[bool]) -> Result<DeformationClass> {
    let q = start.quintuple();
    let k = klein.iter().filter(|b| **b).count() as i64;
    let t = real.iter().filter(|b| **b).count() as i64 - k;
    DeformationClass::new(Quintuple::new(t, k, q.g, q.mu, q.eps), start.spin())
}

fn one_trial(cfg: &MoveConfig, index: usize) -> Result<MoveReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(index as u64));
    let mut r = random_recipe(&mut rng, cfg.max_g, cfg.max_mu)?;
    let start = normalize(&r)?;
    let real = r.real_fibers()?;
    let mut klein: Vec<bool> = r.real_point_counts().iter().map(|n| n % 2 == 1).collect();
    let mut sites: Vec<TransformSite> = real
        .iter()
        .zip(1..)
        .filter(|(is_real, _)| **is_real)
        .map(|(_, i)| TransformSite::RealPoint(i))
        .collect();
    if r.curve().has_real_points() {
        sites.push(TransformSite::ConjugatePair);
    }
    let mut report = MoveReport {
        trials: 1,
        ..MoveReport::default()
    };
    let fail = |report: &mut MoveReport, msg: String| report.failures.push(format!("trial {index}: {msg}"));
    let moves = if sites.is_empty() {
        0
    } else {
        rng.gen_range(1..=cfg.max_moves)
    };
    for _ in 0..moves {
        let before = normalize(&r)?;
        let site = *sites.choose(&mut rng).expect("non-empty");
        let next = elementary_transform(&r, site)?;

        let twice = elementary_transform(&next, site)?;
        report.cancellation_checks += 1;
        if normalize(&twice)? != before {
            fail(&mut report, format!("{site:?} twice changed {before}"));
        }
        let with_pair = elementary_transform(&r, TransformSite::ConjugatePair)?;
        report.neutrality_checks += 1;
        if normalize(&with_pair)? != before || !same_deformation_class(&r, &with_pair)? {
            fail(&mut report, format!("conjugate pair changed {before}"));
        }

        if let TransformSite::RealPoint(i) = site {
            klein[(i - 1) as usize] ^= true;
            report.flips += 1;
        }
        let expected = predicted(&start, &klein, &real)?;
        let got = normalize(&next)?;
        if got != expected {
            fail(&mut report, format!("after {site:?}: {got}, expected {expected}"));
        }
        report.moves += 1;
        r = next;
    }
    Ok(report)
}

/// Random move sequences checked against the parity model of the real
/// part.
pub fn move_trials(cfg: &MoveConfig, exec: Execution) -> MoveReport {
    let indices: Vec<usize> = (0..cfg.trials).collect();
    let mut total = MoveReport::default();
    for (i, r) in exec.map(&indices, |i| one_trial(cfg, *i)).into_iter().enumerate() {
        match r {
            Ok(r) => total.absorb(r),
            Err(e) => {
                total.trials += 1;
                total.failures.push(format!("trial {i}: {e}"));
            }
        }
    }
    total
}

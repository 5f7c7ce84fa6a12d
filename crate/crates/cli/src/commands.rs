//! Execution of each subcommand into an [`OutputRecord`].

use std::fs;
use std::path::Path;

use jknot_cs::cs::{
    cover_from_orbifold, cs_knot_on, cs_orbifold_on, lens_cs, lens_cs_fraction, KNOT_INTERVALS, ORBIFOLD_INTERVALS,
};
use jknot_cs::schlafli::{lifted_hyperbolic, lifted_spherical, LiftedSample};
use jknot_cs::{Error, GeometricComponent, KnotParams, OrbifoldSpec, TrackerConfig};
use rayon::prelude::*;

use crate::args::{Branch, Cli, Command, CsTarget, KnotArgs, TableName};
use crate::record::{Inputs, Meta, Outcome, OutputRecord, TableRow, TraceRow};
use crate::Failure;

/// Knots of the first reference table, in its row order.
pub const PAPER_1: [(u32, u32); 10] = [
    (1, 1),
    (2, 1),
    (3, 1),
    (4, 1),
    (2, 2),
    (3, 2),
    (4, 2),
    (3, 3),
    (4, 3),
    (4, 4),
];

/// Non-amphicheiral knots of the orbifold table, one block each.
pub const PAPER_2: [(u32, u32); 6] = [(2, 1), (3, 1), (4, 1), (3, 2), (4, 2), (4, 3)];

/// Orbifold indices of each block.
pub const PAPER_2_K: std::ops::RangeInclusive<u32> = 3..=10;

/// Samples per branch for `trace` and the cache when no interval count is given.
const TRACE_SAMPLES: usize = 200;

struct Ctx<'a> {
    cli: &'a Cli,
    config: TrackerConfig,
}

impl Ctx<'_> {
    fn meta(&self) -> Meta {
        Meta::new(self.cli.tol, self.config.steps)
    }

    fn locate(&self, params: KnotParams) -> Result<GeometricComponent, Failure> {
        let comp = GeometricComponent::locate(params, self.cli.tol, self.config)?;
        if let Some(dir) = &self.cli.cache {
            write_cache(
                dir,
                &comp,
                self.samples(self.cli.hyp_intervals),
                self.samples(self.cli.sph_intervals),
            )?;
        }
        Ok(comp)
    }

    fn samples(&self, intervals: Option<usize>) -> usize {
        intervals.unwrap_or(TRACE_SAMPLES)
    }

    fn intervals(&self, default: usize) -> (usize, usize) {
        (
            self.cli.hyp_intervals.unwrap_or(default),
            self.cli.sph_intervals.unwrap_or(default),
        )
    }
}

fn params(k: KnotArgs) -> Result<KnotParams, Failure> {
    Ok(KnotParams::new(k.n, k.m)?)
}

fn knot_inputs(k: KnotArgs) -> Inputs {
    Inputs {
        n: Some(k.n),
        m: Some(k.m),
        ..Inputs::default()
    }
}

pub fn execute(cli: &Cli) -> Result<OutputRecord, Failure> {
    let defaults = TrackerConfig::default();
    let config = TrackerConfig {
        steps: cli.steps.unwrap_or(defaults.steps),
        ..defaults
    };
    if config.steps == 0 {
        return Err(Error::InvalidArgument("--steps must be positive".into()).into());
    }
    let ctx = Ctx { cli, config };
    match &cli.command {
        Command::Alpha0(k) => alpha0(&ctx, *k),
        Command::Cs { target } => cs(&ctx, target),
        Command::Table { which } => table(&ctx, *which),
        Command::Trace(t) => trace(&ctx, t.knot, t.k, t.branch),
    }
}

fn alpha0(ctx: &Ctx, k: KnotArgs) -> Result<OutputRecord, Failure> {
    let a = ctx.locate(params(k)?)?.alpha0;
    Ok(OutputRecord {
        command: "alpha0".into(),
        inputs: knot_inputs(k),
        result: Outcome::Alpha0 {
            alpha0: a.alpha0,
            collision_gap: a.collision_gap,
            collision_x: a.collision_x,
        },
        meta: ctx.meta(),
    })
}

fn cs(ctx: &Ctx, target: &CsTarget) -> Result<OutputRecord, Failure> {
    let (command, inputs, value, exact) = match *target {
        CsTarget::Knot(k) => {
            let (h, s) = ctx.intervals(KNOT_INTERVALS);
            let comp = ctx.locate(params(k)?)?;
            let v = cs_knot_on(&comp, h, s)?;
            let inputs = Inputs {
                hyp_intervals: Some(h),
                sph_intervals: Some(s),
                ..knot_inputs(k)
            };
            ("cs knot", inputs, v, None)
        }
        CsTarget::Orbifold(o) | CsTarget::Cover(o) => {
            let spec = OrbifoldSpec::new(params(o.knot)?, o.k)?;
            let (h, s) = ctx.intervals(ORBIFOLD_INTERVALS);
            let comp = ctx.locate(spec.params)?;
            let orb = cs_orbifold_on(&comp, spec.k, h, s)?;
            let inputs = Inputs {
                k: Some(o.k),
                hyp_intervals: Some(h),
                sph_intervals: Some(s),
                ..knot_inputs(o.knot)
            };
            match target {
                CsTarget::Cover(_) => ("cs cover", inputs, cover_from_orbifold(orb, spec.k), None),
                _ => ("cs orbifold", inputs, orb, None),
            }
        }
        CsTarget::Lens(k) => {
            let p = params(k)?;
            let (num, den) = lens_cs_fraction(p);
            ("cs lens", knot_inputs(k), lens_cs(p), Some(format!("{num}/{den}")))
        }
    };
    let mut meta = ctx.meta();
    meta.exact = exact;
    Ok(OutputRecord {
        command: command.into(),
        inputs,
        result: Outcome::Value {
            value: value.value,
            modulus: value.modulus,
        },
        meta,
    })
}

fn table(ctx: &Ctx, which: TableName) -> Result<OutputRecord, Failure> {
    let (name, default, rows) = match which {
        TableName::Paper1 => {
            let (h, s) = ctx.intervals(KNOT_INTERVALS);
            let rows = PAPER_1
                .par_iter()
                .map(|&(n, m)| -> Result<TableRow, Failure> {
                    let comp = ctx.locate(KnotParams::new(n, m)?)?;
                    let v = cs_knot_on(&comp, h, s)?;
                    Ok(TableRow {
                        n,
                        m,
                        k: None,
                        alpha0: Some(comp.alpha0()),
                        value: v.value,
                        modulus: v.modulus,
                        cover: None,
                        cover_modulus: None,
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            ("paper-1", KNOT_INTERVALS, rows)
        }
        TableName::Paper2 => {
            let (h, s) = ctx.intervals(ORBIFOLD_INTERVALS);
            let blocks = PAPER_2
                .par_iter()
                .map(|&(n, m)| -> Result<Vec<TableRow>, Failure> {
                    let comp = ctx.locate(KnotParams::new(n, m)?)?;
                    PAPER_2_K
                        .map(|k| {
                            let orb = cs_orbifold_on(&comp, k, h, s)?;
                            let cover = cover_from_orbifold(orb, k);
                            Ok(TableRow {
                                n,
                                m,
                                k: Some(k),
                                alpha0: None,
                                value: orb.value,
                                modulus: orb.modulus,
                                cover: Some(cover.value),
                                cover_modulus: Some(cover.modulus),
                            })
                        })
                        .collect()
                })
                .collect::<Result<Vec<_>, _>>()?;
            ("paper-2", ORBIFOLD_INTERVALS, blocks.concat())
        }
    };
    let (h, s) = ctx.intervals(default);
    Ok(OutputRecord {
        command: format!("table {name}"),
        inputs: Inputs {
            hyp_intervals: Some(h),
            sph_intervals: Some(s),
            table: Some(name.into()),
            ..Inputs::default()
        },
        result: Outcome::Table { rows },
        meta: ctx.meta(),
    })
}

/// Samples of one branch with its Schlafli integrand contribution: `2 arg L`
/// on the hyperbolic branch, `arg L(v_i)` on a spherical one.
pub fn branch_rows(
    comp: &GeometricComponent,
    branch: Branch,
    lower: f64,
    samples: usize,
) -> Result<Vec<TraceRow>, Error> {
    let row = |s: &LiftedSample, factor: f64| TraceRow {
        alpha: s.alpha,
        re_x: s.x.re,
        im_x: s.x.im,
        beta: factor * s.arg,
    };
    Ok(match branch {
        Branch::Hyperbolic => lifted_hyperbolic(comp, lower, samples, 1)?
            .iter()
            .map(|s| row(s, 2.0))
            .collect(),
        Branch::Spherical1 | Branch::Spherical2 => {
            let (a, b) = lifted_spherical(comp, samples, 1)?;
            let path = if branch == Branch::Spherical1 { a } else { b };
            path.iter().map(|s| row(s, 1.0)).collect()
        }
    })
}

fn trace(ctx: &Ctx, k: KnotArgs, orbifold: Option<u32>, branch: Branch) -> Result<OutputRecord, Failure> {
    let p = params(k)?;
    let spec = orbifold.map(|k| OrbifoldSpec::new(p, k)).transpose()?;
    let comp = ctx.locate(p)?;
    let lower = match spec {
        Some(spec) => {
            spec.check_hyperbolic(comp.alpha0())?;
            spec.cone_angle()
        }
        None => 0.0,
    };
    let samples = match branch {
        Branch::Hyperbolic => ctx.samples(ctx.cli.hyp_intervals),
        _ => ctx.samples(ctx.cli.sph_intervals),
    };
    if samples == 0 {
        return Err(Error::BadIntervalCount(0).into());
    }
    let rows = branch_rows(&comp, branch, lower, samples)?;
    Ok(OutputRecord {
        command: "trace".into(),
        inputs: Inputs {
            k: orbifold,
            hyp_intervals: (branch == Branch::Hyperbolic).then_some(samples),
            sph_intervals: (branch != Branch::Hyperbolic).then_some(samples),
            branch: Some(branch.name().into()),
            ..knot_inputs(k)
        },
        result: Outcome::Trace { rows },
        meta: ctx.meta(),
    })
}

/// Writes `j{n}_{m}_{branch}.csv` for the three branches of `comp`.
fn write_cache(dir: &Path, comp: &GeometricComponent, hyp: usize, sph: usize) -> Result<(), Failure> {
    fs::create_dir_all(dir)?;
    let (n, m) = (comp.params.n(), comp.params.m());
    for branch in [Branch::Hyperbolic, Branch::Spherical1, Branch::Spherical2] {
        let samples = if branch == Branch::Hyperbolic { hyp } else { sph };
        let rows = branch_rows(comp, branch, 0.0, samples.max(2))?;
        let mut w = csv::Writer::from_path(dir.join(format!("j{n}_{m}_{}.csv", branch.name())))?;
        for r in rows {
            w.serialize(r)?;
        }
        w.flush()?;
    }
    Ok(())
}

//! Command-line front end: argument parsing, JSON and SVG output, and the
//! batch sweep.
//!
//! Every command writes one JSON document to standard output. Failures
//! write `{"error": {...}}` instead and exit with 1 (usage), 2 (domain) or
//! 3 (internal).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arith::{ContinuedFraction, Fraction};
use crate::ball::{build_ball, classify_diagram, NormBall};
use crate::diagram::{linking_number, RationalDiagram};
use crate::error::{Error, Result};
use crate::farey::{t10_path_length, t10_tree_build, x10_in_tree, FareyVertex};
use crate::geometry::{ConvexPolygon, RationalPoint};
use crate::satellite::{face_count_chain, satellite_ball, satellite_ball_minkowski, SatelliteInput};

/// Environment variable holding the sweep's worker count.
pub const WORKERS_ENV: &str = "TWOBRIDGE_WORKERS";

#[derive(Debug, Parser)]
#[command(name = "twobridge", version, about = "Thurston norm balls of 2-bridge link exteriors")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertex norms, rays, faces and shape of one link.
    Ball(BallArgs),
    /// The norm of one homology class.
    Eval(EvalArgs),
    /// The path from 1/0 to p/q in the tree T_{1/0}.
    FareyPath(FareyArgs),
    /// Compose a companion and a pattern ball.
    Satellite(SatelliteArgs),
    /// A construction chain ending in a ball with the requested face count.
    Family(FamilyArgs),
    /// Check every even-denominator link up to a bound.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct LinkArgs {
    /// `p/q` with q even, or a diagram `T(a1,...)`.
    pub link: Option<String>,
    /// Box labels `a1,a2,...` instead of a fraction.
    #[arg(long)]
    pub cf: Option<String>,
    /// Use the mirror image.
    #[arg(long)]
    pub mirror: bool,
}

#[derive(Debug, Args)]
pub struct BallArgs {
    #[command(flatten)]
    pub link: LinkArgs,
    /// Also render the ball to this SVG file.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub link: LinkArgs,
    /// The class `a,b` meaning a*l1 + b*l2; entries may be fractions.
    #[arg(long = "class", allow_hyphen_values = true)]
    pub class: String,
}

#[derive(Debug, Args)]
pub struct FareyArgs {
    pub fraction: String,
    /// Fixed denominator bound for the tree instead of automatic widening.
    #[arg(long)]
    pub max_den: Option<i64>,
}

#[derive(Debug, Args)]
pub struct SatelliteArgs {
    /// `p/q`, `T(...)`, inline ball JSON, or a path to ball JSON.
    #[arg(long, allow_hyphen_values = true)]
    pub companion: String,
    #[arg(long, allow_hyphen_values = true)]
    pub pattern: String,
    /// Overrides the companion's traced linking number.
    #[arg(long, allow_hyphen_values = true)]
    pub lk_companion: Option<i64>,
    /// Overrides the pattern's traced linking number.
    #[arg(long, allow_hyphen_values = true)]
    pub lk_pattern: Option<i64>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Even number of faces `2n`.
    #[arg(long, allow_hyphen_values = true)]
    pub faces: i64,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Largest denominator, at most 2000.
    pub max_q: i64,
}

/// Parses `args` (program name first), runs the command, and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let err = Error::Parse(e.render().to_string().trim().to_string());
            emit(out, &error_json(&err));
            return err.exit_code();
        }
    };
    match execute(&cli.command) {
        Ok(Outcome { doc, code }) => {
            emit(out, &doc);
            code
        }
        Err(err) => {
            emit(out, &error_json(&err));
            err.exit_code()
        }
    }
}

struct Outcome {
    doc: Value,
    code: i32,
}

impl From<Value> for Outcome {
    fn from(doc: Value) -> Self {
        Outcome { doc, code: 0 }
    }
}

fn emit(out: &mut dyn Write, doc: &Value) {
    let text = serde_json::to_string_pretty(doc).expect("JSON values serialize");
    let _ = writeln!(out, "{text}");
}

pub fn error_json(err: &Error) -> Value {
    json!({
        "error": {
            "kind": err.kind(),
            "message": err.to_string(),
            "exit_code": err.exit_code(),
        }
    })
}

fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Ball(a) => {
            let d = resolve_link(&a.link)?;
            let doc = ball_json(&d)?;
            if let Some(path) = &a.svg {
                let ball = build_ball(&crate::ball::vertex_norms_of_diagram(&d)?)?;
                write_svg(path, &ball, &d.to_string())?;
            }
            Ok(doc.into())
        }
        Command::Eval(a) => {
            let d = resolve_link(&a.link)?;
            let (x, y) = parse_class(&a.class)?;
            let ball = build_ball(&crate::ball::vertex_norms_of_diagram(&d)?)?;
            Ok(Value::String(ball.evaluate(&x, &y).to_string()).into())
        }
        Command::FareyPath(a) => farey_json(&a.fraction, a.max_den).map(Into::into),
        Command::Satellite(a) => satellite_json(a).map(Into::into),
        Command::Family(a) => family_json(a).map(Into::into),
        Command::Sweep(a) => {
            let report = sweep(a.max_q)?;
            let code = if report.failures.is_empty() { 0 } else { 3 };
            Ok(Outcome {
                doc: report.to_json(),
                code,
            })
        }
    }
}


/// A diagram from `p/q`, `T(...)`, or `--cf`.
pub fn resolve_link(a: &LinkArgs) -> Result<RationalDiagram> {
    let d = match (&a.link, &a.cf) {
        (Some(_), Some(_)) => {
            return Err(Error::Parse("give either a link or --cf, not both".into()))
        }
        (None, None) => return Err(Error::Parse("missing link: p/q, T(...) or --cf".into())),
        (None, Some(cf)) => RationalDiagram::new(cf.parse::<ContinuedFraction>()?, false)?,
        (Some(s), None) => parse_link(s)?,
    };
    Ok(if a.mirror { d.mirrored() } else { d })
}

fn parse_link(s: &str) -> Result<RationalDiagram> {
    let s = s.trim();
    if s.starts_with('T') {
        s.parse::<RationalDiagram>()
    } else {
        RationalDiagram::from_fraction(&s.parse::<Fraction>()?)
    }
}

fn parse_class(s: &str) -> Result<(Fraction, Fraction)> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Parse(format!("class must be a,b: {s:?}")));
    }
    let a: Fraction = parts[0].parse()?;
    let b: Fraction = parts[1].parse()?;
    if a.is_infinite() || b.is_infinite() {
        return Err(Error::Parse("class entries must be finite".into()));
    }
    Ok((a, b))
}

/// Slopes print as `p/q`, with `inf` for the vertical line.
pub fn slope_string(f: &Fraction) -> String {
    if f.is_infinite() {
        "inf".into()
    } else {
        f.to_string()
    }
}

fn point_json(p: &RationalPoint) -> Value {
    json!([p.x.to_string(), p.y.to_string()])
}

fn rays_json(ball: &NormBall) -> Value {
    ball.rays().iter().map(slope_string).collect()
}

/// The full data of a ball.
pub fn norm_ball_json(ball: &NormBall) -> Value {
    json!({
        "zero": ball.is_zero(),
        "finite_rays": ball.finite_rays().iter().map(|(d, x)| json!({
            "direction": [d.a().to_string(), d.b().to_string()],
            "slope": slope_string(&d.slope()),
            "value": x.to_string(),
        })).collect::<Vec<_>>(),
        "null_directions": ball.null_directions().iter().map(|d| json!({
            "direction": [d.a().to_string(), d.b().to_string()],
            "slope": slope_string(&d.slope()),
        })).collect::<Vec<_>>(),
        "dual": ball.dual().vertices().iter().map(point_json).collect::<Vec<_>>(),
    })
}

pub fn ball_json(d: &RationalDiagram) -> Result<Value> {
    let c = classify_diagram(d)?;
    let v = c.vertex_norms;
    Ok(json!({
        "fraction": d.fraction().to_string(),
        "cf": d.boxes().to_string(),
        "mirror": d.mirror(),
        "vertex_norms": {"l1": v.x10, "l2": v.x01, "l1+l2": v.x11, "l1-l2": v.x1m1},
        "rays": c.rays.iter().map(slope_string).collect::<Vec<_>>(),
        "faces": c.faces,
        "shape": c.shape.to_string(),
        "base_type": c.base_type,
        "fibers_S10": c.fibers_with_s10,
        "linking_number": linking_number(d)?,
        "ball": norm_ball_json(&c.ball),
    }))
}

fn farey_json(fraction: &str, max_den: Option<i64>) -> Result<Value> {
    let f: Fraction = fraction.parse()?;
    let lg = t10_path_length(&f)?;
    let v = FareyVertex::from_fraction(&f)?;
    let bound = max_den.unwrap_or_else(|| v.denom());
    let tree = t10_tree_build(bound);
    let path = tree.path(&v).ok_or_else(|| {
        Error::Domain(format!("{f} is not reached with denominators up to {bound}"))
    })?;
    if path.len() as u32 != lg + 1 {
        return Err(Error::Internal(format!("{f}: two different tree paths")));
    }
    Ok(json!({
        "fraction": f.to_string(),
        "path": path.iter().map(|v| v.value().to_string()).collect::<Vec<_>>(),
        "lg": lg,
        "x10": lg - 1,
    }))
}

/// A satellite operand: its ball, traced linking number if known, and a label.
fn resolve_operand(s: &str) -> Result<(NormBall, Option<i64>, String)> {
    let t = s.trim();
    let text = if t.starts_with('{') {
        Some(t.to_string())
    } else if t.ends_with(".json") || Path::new(t).is_file() {
        Some(
            std::fs::read_to_string(t)
                .map_err(|e| Error::Parse(format!("cannot read {t}: {e}")))?,
        )
    } else {
        None
    };
    match text {
        Some(text) => {
            let doc: Value = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("bad ball JSON: {e}")))?;
            let ball = ball_from_json(&doc)?;
            let lk = doc.get("linking_number").and_then(Value::as_i64);
            Ok((ball, lk, "json".into()))
        }
        None => {
            let d = parse_link(t)?;
            let ball = build_ball(&crate::ball::vertex_norms_of_diagram(&d)?)?;
            Ok((ball, Some(linking_number(&d)?), d.to_string()))
        }
    }
}

/// Reads the `ball.dual` vertex list written by [`norm_ball_json`].
pub fn ball_from_json(doc: &Value) -> Result<NormBall> {
    let dual = doc
        .get("ball")
        .unwrap_or(doc)
        .get("dual")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("ball JSON needs ball.dual".into()))?;
    let coord = |v: &Value| -> Result<Fraction> {
        match v {
            Value::String(s) => s.parse(),
            Value::Number(n) => n.to_string().parse(),
            _ => Err(Error::Parse(format!("bad coordinate {v}"))),
        }
    };
    let points = dual
        .iter()
        .map(|p| {
            let xy = p
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::Parse(format!("bad dual vertex {p}")))?;
            Ok(RationalPoint::new(coord(&xy[0])?, coord(&xy[1])?))
        })
        .collect::<Result<Vec<_>>>()?;
    let poly: ConvexPolygon = crate::geometry::convex_hull(&points);
    NormBall::from_dual(&poly)
}

fn satellite_json(a: &SatelliteArgs) -> Result<Value> {
    let (companion, lk_c, c_label) = resolve_operand(&a.companion)?;
    let (pattern, lk_p, p_label) = resolve_operand(&a.pattern)?;
    let need = |flag: &str| Error::Parse(format!("{flag} is required for JSON operands without linking_number"));
    let lk_companion = a.lk_companion.or(lk_c).ok_or_else(|| need("--lk-companion"))?;
    let lk_pattern = a.lk_pattern.or(lk_p).ok_or_else(|| need("--lk-pattern"))?;
    let input = SatelliteInput {
        companion,
        lk_companion,
        pattern,
        lk_pattern,
    };
    let ball = satellite_ball(&input)?;
    if satellite_ball_minkowski(&input)? != ball {
        return Err(Error::Internal("ray and Minkowski constructions disagree".into()));
    }
    if let Some(path) = &a.svg {
        write_svg(path, &ball, "satellite")?;
    }
    Ok(json!({
        "companion": {"source": c_label, "linking_number": lk_companion},
        "pattern": {"source": p_label, "linking_number": lk_pattern},
        "linking_number": lk_companion.checked_mul(lk_pattern),
        "rays": rays_json(&ball),
        "faces": ball.face_count(),
        "shape": ball.shape().to_string(),
        "ball": norm_ball_json(&ball),
    }))
}

fn family_json(a: &FamilyArgs) -> Result<Value> {
    if a.faces < 0 || a.faces % 2 != 0 {
        return Err(Error::Domain(format!(
            "face count must be a nonnegative even number, got {}",
            a.faces
        )));
    }
    let chain = face_count_chain(a.faces / 2)?;
    let last = chain.last().expect("nonempty chain");
    if last.ball.face_count() as i64 != a.faces {
        return Err(Error::Internal(format!(
            "construction produced {} faces, not {}",
            last.ball.face_count(),
            a.faces
        )));
    }
    if let Some(path) = &a.svg {
        write_svg(path, &last.ball, &format!("{} faces", a.faces))?;
    }
    Ok(json!({
        "faces_requested": a.faces,
        "chain": chain.iter().enumerate().map(|(i, s)| json!({
            "step": i,
            "provenance": s.provenance,
            "linking_number": s.lk,
            "rays": rays_json(&s.ball),
            "faces": s.ball.face_count(),
            "shape": s.ball.shape().to_string(),
        })).collect::<Vec<_>>(),
        "rays": rays_json(&last.ball),
        "faces": last.ball.face_count(),
        "shape": last.ball.shape().to_string(),
        "ball": norm_ball_json(&last.ball),
    }))
}

/// Result of [`sweep`].
#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub max_q: i64,
    pub checked: usize,
    /// Offending fraction and reason, ordered by fraction.
    pub failures: Vec<(Fraction, String)>,
    pub shapes: BTreeMap<String, usize>,
    pub max_faces: usize,
}

impl SweepReport {
    pub fn summary(&self) -> String {
        format!("checked {} links, {} failures", self.checked, self.failures.len())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "max_q": self.max_q,
            "checked": self.checked,
            "max_faces": self.max_faces,
            "shapes": self.shapes,
            "failures": self.failures.iter().map(|(f, why)| json!({
                "fraction": f.to_string(),
                "reason": why,
            })).collect::<Vec<_>>(),
            "summary": self.summary(),
        })
    }
}

/// Every reduced `p/q` in `(0,1)` with `q` even and at most `max_q`.
pub fn even_fractions(max_q: i64) -> Vec<Fraction> {
    let mut out = Vec::new();
    for q in (2..=max_q).step_by(2) {
        for p in (1..q).filter(|p| num_integer::gcd(*p, q) == 1) {
            out.push(Fraction::new(p, q).expect("q > 0"));
        }
    }
    out.sort();
    out
}

struct Checked {
    shape: String,
    faces: usize,
    failure: Option<String>,
}

fn check_one(f: &Fraction, tree: &crate::farey::FareyTree) -> Checked {
    let run = || -> Result<(String, usize, Option<String>)> {
        let d = RationalDiagram::from_fraction(f)?;
        let c = classify_diagram(&d)?;
        let x10 = x10_in_tree(tree, f)?;
        let mut why = Vec::new();
        if x10 != c.vertex_norms.x10 {
            why.push(format!("x10 {} but Farey path gives {x10}", c.vertex_norms.x10));
        }
        if c.faces > 8 {
            why.push(format!("{} faces", c.faces));
        }
        let b = &c.ball;
        let n = |a: i64, bb: i64| b.evaluate(&Fraction::from(a), &Fraction::from(bb));
        if n(2, 1) != n(1, 0) + n(1, 1) {
            why.push("x(2,1) != x(1,0) + x(1,1)".into());
        }
        if n(2, -1) != n(1, 0) + n(1, -1) {
            why.push("x(2,-1) != x(1,0) + x(1,-1)".into());
        }
        let within_pm1 = c.rays.iter().all(|r| r.is_integer() && r.abs() == Fraction::one());
        if c.base_type != within_pm1 {
            why.push("base-type disagrees with rays".into());
        }
        Ok((c.shape.to_string(), c.faces, (!why.is_empty()).then(|| why.join("; "))))
    };
    match run() {
        Ok((shape, faces, failure)) => Checked { shape, faces, failure },
        Err(e) => Checked {
            shape: "error".into(),
            faces: 0,
            failure: Some(e.to_string()),
        },
    }
}

/// Runs the oracle, octagon, additivity and base-type checks on every link
/// with even denominator up to `max_q`, on a pool sized by
/// `TWOBRIDGE_WORKERS` when set.
pub fn sweep(max_q: i64) -> Result<SweepReport> {
    if !(2..=2000).contains(&max_q) {
        return Err(Error::Domain(format!("sweep bound must lie in 2..=2000, got {max_q}")));
    }
    let fractions = even_fractions(max_q);
    let tree = t10_tree_build(max_q);
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = std::env::var(WORKERS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        pool = pool.num_threads(n);
    }
    let pool = pool
        .build()
        .map_err(|e| Error::Internal(format!("worker pool: {e}")))?;
    let results: Vec<Checked> =
        pool.install(|| fractions.par_iter().map(|f| check_one(f, &tree)).collect());
    let mut report = SweepReport {
        max_q,
        checked: fractions.len(),
        ..Default::default()
    };
    for (f, r) in fractions.into_iter().zip(results) {
        *report.shapes.entry(r.shape).or_default() += 1;
        report.max_faces = report.max_faces.max(r.faces);
        if let Some(why) = r.failure {
            report.failures.push((f, why));
        }
    }
    Ok(report)
}

const VIEW: i64 = 3;
const PX: f64 = 100.0;

/// Clips `[-3,3]^2` by `<v, phi> <= 1` for each dual vertex `phi`.
fn clipped_ball(ball: &NormBall) -> Vec<RationalPoint> {
    let mut poly = vec![
        RationalPoint::from_ints(-VIEW, -VIEW),
        RationalPoint::from_ints(VIEW, -VIEW),
        RationalPoint::from_ints(VIEW, VIEW),
        RationalPoint::from_ints(-VIEW, VIEW),
    ];
    for phi in ball.dual().vertices() {
        if phi.is_origin() || poly.is_empty() {
            continue;
        }
        let f = |p: &RationalPoint| phi.dot(p) - Fraction::one();
        let mut next = Vec::new();
        for i in 0..poly.len() {
            let (p, q) = (&poly[i], &poly[(i + 1) % poly.len()]);
            let (fp, fq) = (f(p), f(q));
            let zero = Fraction::zero();
            if fp <= zero {
                next.push(p.clone());
            }
            if (fp < zero && fq > zero) || (fp > zero && fq < zero) {
                let t = &fp / &(&fp - &fq);
                next.push(p.add(&q.sub(p).scale(&t)));
            }
        }
        poly = next;
    }
    poly
}

fn screen(p: &RationalPoint) -> (f64, f64) {
    (
        300.0 + PX * p.x.to_f64(),
        300.0 - PX * p.y.to_f64(),
    )
}

/// The unit ball clipped to `[-3,3]^2`, null directions drawn as arrows.
pub fn render_svg(ball: &NormBall, title: &str) -> String {
    let mut s = String::new();
    s.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n",
    );
    s.push_str("<defs><marker id=\"arrow\" markerWidth=\"10\" markerHeight=\"10\" refX=\"8\" refY=\"3\" orient=\"auto\"><path d=\"M0,0 L8,3 L0,6 z\" fill=\"#c0392b\"/></marker></defs>\n");
    s.push_str("<rect width=\"600\" height=\"600\" fill=\"white\"/>\n");
    s.push_str("<line x1=\"0\" y1=\"300\" x2=\"600\" y2=\"300\" stroke=\"#bbb\"/>\n");
    s.push_str("<line x1=\"300\" y1=\"0\" x2=\"300\" y2=\"600\" stroke=\"#bbb\"/>\n");
    let poly = clipped_ball(ball);
    let pts: Vec<String> = poly
        .iter()
        .map(|p| {
            let (x, y) = screen(p);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    s.push_str(&format!(
        "<polygon points=\"{}\" fill=\"#5dade2\" fill-opacity=\"0.4\" stroke=\"#1f618d\" stroke-width=\"2\"/>\n",
        pts.join(" ")
    ));
    for (d, x) in ball.finite_rays() {
        for sign in [1i64, -1] {
            let v = d.point().scale(&(Fraction::from(sign) / x));
            let (cx, cy) = screen(&v);
            if (0.0..=600.0).contains(&cx) && (0.0..=600.0).contains(&cy) {
                s.push_str(&format!(
                    "<circle cx=\"{cx:.3}\" cy=\"{cy:.3}\" r=\"4\" fill=\"#1f618d\"/>\n"
                ));
            }
        }
    }
    for d in ball.null_directions() {
        let (a, b) = (d.a().to_string().parse::<f64>().unwrap_or(0.0), d.b().to_string().parse::<f64>().unwrap_or(0.0));
        let len = (a * a + b * b).sqrt();
        let (ux, uy) = (a / len * 2.8, b / len * 2.8);
        for sign in [1.0, -1.0] {
            let (x2, y2) = (300.0 + sign * PX * ux, 300.0 - sign * PX * uy);
            s.push_str(&format!(
                "<line x1=\"300\" y1=\"300\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" stroke=\"#c0392b\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n"
            ));
        }
        s.push_str(&format!(
            "<text x=\"{:.3}\" y=\"{:.3}\" fill=\"#c0392b\" font-size=\"14\">null slope {}</text>\n",
            300.0 + PX * ux * 0.6 + 6.0,
            300.0 - PX * uy * 0.6 - 6.0,
            slope_string(&d.slope())
        ));
    }
    s.push_str(&format!(
        "<text x=\"10\" y=\"20\" font-size=\"16\">{} ({} faces)</text>\n</svg>\n",
        xml_escape(title),
        ball.face_count()
    ));
    s
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn write_svg(path: &Path, ball: &NormBall, title: &str) -> Result<()> {
    std::fs::write(path, render_svg(ball, title))
        .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))
}

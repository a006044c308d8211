use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rectiturn::hardness::{
    build_fit_sequence, build_witness, build_wrapped_sequence, ThreePartitionInstance,
    DEFAULT_WRAP_WINDINGS,
};
use rectiturn::{
    classify, decompose_x, decompose_xy, delta_Delta, oracle_min, parse_sequence, ClassTag,
    GridPolygon, Objective, OracleConfig, PolygonJson, TurnSequence,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "rectiturn",
    version,
    about = "Small grid polygons for rectilinear turn sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a turn sequence, or a polygon JSON file against its sequence.
    Validate(InputArgs),
    /// Report the monotonicity class and decomposition of a sequence.
    Classify(InputArgs),
    /// Minimize area, perimeter or bounding box for an x- or xy-monotone sequence.
    Solve(SolveArgs),
    /// Exhaustive search for small sequences of any class.
    Oracle(OracleArgs),
    /// Build the 3-Partition fit gadget for an instance.
    Gadget(GadgetArgs),
    /// Draw a polygon JSON file as SVG.
    Render(RenderArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Input file, `-` for stdin.
    #[arg(default_value = "-", conflicts_with = "seq")]
    input: PathBuf,
    /// Inline sequence instead of a file.
    #[arg(long)]
    seq: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, short, value_enum)]
    objective: ObjectiveArg,
    /// Omit the bounding-box rectangle from SVG output.
    #[arg(long)]
    no_bbox: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, short, value_enum, default_value_t = ObjectiveArg::Area)]
    objective: ObjectiveArg,
    /// Only search edge lengths up to this bound instead of certifying the optimum.
    #[arg(long, value_name = "L")]
    max_edge: Option<i64>,
    /// Refuse sequences longer than this.
    #[arg(long, default_value_t = rectiturn::oracle::DEFAULT_MAX_N)]
    max_n: usize,
    /// Print the extreme minimum areas over all sequences of length N instead.
    #[arg(long, value_name = "N", conflicts_with_all = ["input", "seq"])]
    delta: Option<usize>,
    #[arg(long)]
    no_bbox: bool,
}

#[derive(Args)]
struct GadgetArgs {
    /// 3-Partition instance JSON, `{"m":..,"B":..,"A":[..]}`; `-` for stdin.
    #[arg(default_value = "-")]
    instance: PathBuf,
    /// Append the wrapping spiral with this many windings.
    #[arg(long, value_name = "WINDINGS", num_args = 0..=1, default_missing_value = "4")]
    wrap: Option<u64>,
    /// Draw the fitting polygon for a solved instance.
    #[arg(long, requires = "partition", conflicts_with = "wrap")]
    witness: bool,
    /// Solution as 0-based index triples, inline JSON or a file, e.g. `[[0,1,4],[2,3,5]]`.
    #[arg(long, requires = "witness")]
    partition: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct RenderArgs {
    /// Polygon JSON file, `-` for stdin.
    #[arg(default_value = "-")]
    input: PathBuf,
    #[arg(long)]
    no_bbox: bool,
    /// Pixels per grid unit.
    #[arg(long, default_value_t = 10)]
    scale: i64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Area,
    Perimeter,
    Bbox,
}

impl From<ObjectiveArg> for Objective {
    fn from(o: ObjectiveArg) -> Self {
        match o {
            ObjectiveArg::Area => Objective::Area,
            ObjectiveArg::Perimeter => Objective::Perimeter,
            ObjectiveArg::Bbox => Objective::Bbox,
        }
    }
}

/// Outcome of a subcommand that completed without an I/O or input error.
enum Status {
    Ok,
    /// Input was read but is not valid.
    Invalid,
    /// `solve` declined a general sequence.
    Refused,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|s| {
        out.flush()?;
        Ok(s)
    });
    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Invalid) => ExitCode::from(1),
        Ok(Status::Refused) => ExitCode::from(2),
        Err(e)
            if e.downcast_ref::<io::Error>()
                .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> anyhow::Result<Status> {
    match command {
        Command::Validate(a) => validate(&a, out),
        Command::Classify(a) => classify_cmd(&a, out),
        Command::Solve(a) => solve(&a, out),
        Command::Oracle(a) => oracle(&a, out),
        Command::Gadget(a) => gadget(&a, out),
        Command::Render(a) => render(&a, out),
    }
}

fn read_input(path: &PathBuf) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn input_text(a: &InputArgs) -> anyhow::Result<String> {
    match &a.seq {
        Some(s) => Ok(s.clone()),
        None => read_input(&a.input),
    }
}

fn read_sequence(a: &InputArgs) -> anyhow::Result<TurnSequence> {
    let s = parse_sequence(&input_text(a)?)?;
    s.validate()?;
    Ok(s)
}

fn print_json(out: &mut impl Write, v: &Value) -> anyhow::Result<()> {
    serde_json::to_writer(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn validate(a: &InputArgs, out: &mut impl Write) -> anyhow::Result<Status> {
    let text = input_text(a)?;
    let is_polygon = text.trim_start().starts_with('{');
    let checked = if is_polygon {
        serde_json::from_str::<PolygonJson>(&text)
            .map_err(|e| e.to_string())
            .and_then(|pj| pj.into_polygon().map_err(|e| e.to_string()))
            .map(|(s, _)| s)
    } else {
        parse_sequence(&text)
            .and_then(|s| s.validate().map(|_| s))
            .map_err(|e| e.to_string())
    };
    let kind = if is_polygon { "polygon" } else { "sequence" };
    match (&checked, a.format) {
        (Ok(s), Format::Json) => print_json(
            out,
            &json!({"valid": true, "kind": kind, "n": s.len(), "lefts": s.lefts(), "rights": s.rights()}),
        )?,
        (Ok(s), _) => writeln!(
            out,
            "valid {kind}: n={} L={} R={}",
            s.len(),
            s.lefts(),
            s.rights()
        )?,
        (Err(e), Format::Json) => {
            print_json(out, &json!({"valid": false, "kind": kind, "error": e}))?
        }
        (Err(e), _) => writeln!(out, "invalid {kind}: {e}")?,
    }
    Ok(if checked.is_ok() {
        Status::Ok
    } else {
        Status::Invalid
    })
}

fn class_name(tag: ClassTag) -> &'static str {
    match tag {
        ClassTag::XYMonotone => "xy-monotone",
        ClassTag::XMonotone => "x-monotone",
        ClassTag::General => "general",
    }
}

fn classify_cmd(a: &InputArgs, out: &mut impl Write) -> anyhow::Result<Status> {
    let s = read_sequence(a)?;
    let c = classify(&s);
    let mut v =
        json!({"class": class_name(c.tag), "n": s.len(), "rotation_offset": c.rotation_offset});
    if c.tag == ClassTag::XYMonotone {
        let d = decompose_xy(&s)?;
        v["stairs"] = json!([d.r1, d.r2, d.r3, d.r4]);
    }
    if c.tag != ClassTag::General {
        let h = decompose_x(&s)?;
        v["upper_edges"] = json!(h.upper.len());
        v["lower_edges"] = json!(h.lower.len());
        v["r_top"] = json!(h.r_top);
        v["r_bottom"] = json!(h.r_bottom);
    }
    if a.format == Format::Json {
        print_json(out, &v)?;
        return Ok(Status::Ok);
    }
    write!(
        out,
        "{} n={} offset={}",
        class_name(c.tag),
        s.len(),
        c.rotation_offset
    )?;
    if let Some(st) = v.get("stairs") {
        write!(out, " stairs={st}")?;
    }
    if c.tag != ClassTag::General {
        write!(out, " r_top={} r_bottom={}", v["r_top"], v["r_bottom"])?;
    }
    writeln!(out)?;
    Ok(Status::Ok)
}

fn emit_polygon(
    out: &mut impl Write,
    format: Format,
    objective: Objective,
    value: i64,
    p: &GridPolygon,
    show_bbox: bool,
    extra: &[(&str, Value)],
) -> anyhow::Result<()> {
    let m = p.measures();
    match format {
        Format::Svg => write!(out, "{}", p.to_svg(10, show_bbox))?,
        Format::Json => {
            let pj = p.to_json();
            let mut v = json!({
                "objective": objective.to_string(),
                "value": value,
                "area": m.area,
                "perimeter": m.perimeter,
                "bbox": [m.bbox_w, m.bbox_h],
                "sequence": pj.sequence,
                "vertices": pj.vertices,
            });
            for (k, x) in extra {
                v[*k] = x.clone();
            }
            print_json(out, &v)?;
        }
        Format::Text => {
            writeln!(out, "objective: {objective}")?;
            writeln!(out, "value: {value}")?;
            for (k, x) in extra {
                match x {
                    Value::String(s) => writeln!(out, "{k}: {s}")?,
                    other => writeln!(out, "{k}: {other}")?,
                }
            }
            writeln!(out, "area: {}", m.area)?;
            writeln!(out, "perimeter: {}", m.perimeter)?;
            writeln!(out, "bbox: {}x{}", m.bbox_w, m.bbox_h)?;
            let vs: Vec<String> = p
                .vertices()
                .iter()
                .map(|q| format!("({},{})", q.x, q.y))
                .collect();
            writeln!(out, "vertices: {}", vs.join(" "))?;
        }
    }
    Ok(())
}

fn solve(a: &SolveArgs, out: &mut impl Write) -> anyhow::Result<Status> {
    let s = read_sequence(&a.input)?;
    let objective: Objective = a.objective.into();
    let tag = classify(&s).tag;
    if tag == ClassTag::General {
        eprintln!(
            "refusing: the sequence is not x-monotone, and minimizing {objective} over general sequences is NP-hard.\n\
             For short sequences (n <= {}) try `rectiturn oracle --objective {objective}`.",
            rectiturn::oracle::DEFAULT_MAX_N
        );
        return Ok(Status::Refused);
    }
    let (value, p) = rectiturn::solve(&s, objective)?;
    let extra = [("class", json!(class_name(tag)))];
    emit_polygon(
        out,
        a.input.format,
        objective,
        value,
        &p,
        !a.no_bbox,
        &extra,
    )?;
    Ok(Status::Ok)
}

fn oracle(a: &OracleArgs, out: &mut impl Write) -> anyhow::Result<Status> {
    if let Some(n) = a.delta {
        let (small, large) = delta_Delta(n)?;
        match a.input.format {
            Format::Json => print_json(out, &json!({"n": n, "delta": small, "Delta": large}))?,
            _ => writeln!(out, "n={n} delta={small} Delta={large}")?,
        }
        return Ok(Status::Ok);
    }
    let s = read_sequence(&a.input)?;
    let objective: Objective = a.objective.into();
    let mut cfg = OracleConfig::new(objective, a.max_edge.unwrap_or(4));
    cfg.max_n = a.max_n;
    cfg.escalate = a.max_edge.is_none();
    let (value, p) = oracle_min(&s, &cfg)?;
    let extra = [("exact", json!(cfg.escalate))];
    emit_polygon(
        out,
        a.input.format,
        objective,
        value,
        &p,
        !a.no_bbox,
        &extra,
    )?;
    Ok(Status::Ok)
}

fn parse_partition(arg: &str) -> anyhow::Result<Vec<[usize; 3]>> {
    let text = if arg.trim_start().starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    };
    serde_json::from_str(&text).context("partition must be a JSON list of index triples")
}

fn gadget(a: &GadgetArgs, out: &mut impl Write) -> anyhow::Result<Status> {
    let inst: ThreePartitionInstance =
        serde_json::from_str(&read_input(&a.instance)?).context("parsing 3-Partition instance")?;
    let (s, mut params) = build_fit_sequence(&inst)?;
    if a.witness {
        let partition = parse_partition(a.partition.as_deref().unwrap_or_default())?;
        let p = build_witness(&inst, &partition)?;
        let extra = [
            ("rho", json!(params.rho)),
            ("W", json!(params.w)),
            ("H", json!(params.h)),
        ];
        let area = p.area();
        emit_polygon(out, a.format, Objective::Area, area, &p, true, &extra)?;
        return Ok(Status::Ok);
    }
    let fit_len = s.len();
    params.wrap_windings = a.wrap.unwrap_or(DEFAULT_WRAP_WINDINGS);
    let seq = if a.wrap.is_some() {
        build_wrapped_sequence(&s, &params)?
    } else {
        s
    };
    match a.format {
        Format::Svg => bail!("gadget sequences have no SVG form; use --witness"),
        Format::Json => print_json(
            out,
            &json!({
                "rho": params.rho,
                "W": params.w,
                "H": params.h,
                "wrapped": a.wrap.is_some(),
                "n": seq.len(),
                "sequence": seq.to_string(),
            }),
        )?,
        Format::Text => {
            writeln!(
                out,
                "# rho={} W={} H={} n={}",
                params.rho,
                params.w,
                params.h,
                seq.len()
            )?;
            if let Some(w) = a.wrap {
                writeln!(
                    out,
                    "# wrapped with {w} windings; prefix of length {fit_len} is the fit sequence"
                )?;
            }
            let text = seq.to_string();
            for chunk in text.as_bytes().chunks(80) {
                out.write_all(chunk)?;
                writeln!(out)?;
            }
        }
    }
    Ok(Status::Ok)
}

fn render(a: &RenderArgs, out: &mut impl Write) -> anyhow::Result<Status> {
    if a.scale <= 0 {
        bail!("--scale must be positive");
    }
    let pj: PolygonJson =
        serde_json::from_str(&read_input(&a.input)?).context("parsing polygon JSON")?;
    let (_, p) = pj.into_polygon()?;
    write!(out, "{}", p.to_svg(a.scale, !a.no_bbox))?;
    Ok(Status::Ok)
}

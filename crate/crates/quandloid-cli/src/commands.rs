use std::fs;

use serde::Serialize;

use quandloid::coloring::{counting_invariant, counting_matrix, matrix_report, pointed_profile};
use quandloid::diagram::{parse_diagram, ComponentKind, LinkoidDiagram};
use quandloid::partitions::{partition_count, Cardinality};
use quandloid::pointed::{class_count_burnside_capped, is_n_homogeneous_capped, is_uniform_capped};
use quandloid::presentation::{fundamental_presentation, parse_presentation, QuandlePresentation};
use quandloid::{enumerate_quandles, FiniteQuandle, PointedQuandle, Sign};

use crate::args::{
    ColorCommand, DiagramCommand, DtableArgs, Format, QuandleCommand, QuandleInput, TargetInput,
};
use crate::registry::{named_quandle, pointed_target, Caps, CliError};

type CmdResult = Result<i32, CliError>;

fn read_file(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.to_string(), message: e.to_string() })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}

fn load_quandle(input: &QuandleInput, caps: &Caps) -> Result<FiniteQuandle, CliError> {
    match (&input.r#in, &input.named) {
        (Some(path), None) => {
            let text = read_file(path)?;
            serde_json::from_str::<FiniteQuandle>(&text)
                .map_err(|e| json_error(path, e))
        }
        (None, Some(spec)) => named_quandle(spec, caps),
        _ => Err(CliError::config("provide exactly one of --in or --named")),
    }
}

fn load_target(input: &TargetInput, caps: &Caps) -> Result<FiniteQuandle, CliError> {
    match (&input.target, &input.named) {
        (Some(path), None) => {
            let text = read_file(path)?;
            serde_json::from_str::<FiniteQuandle>(&text)
                .map_err(|e| json_error(path, e))
        }
        (None, Some(spec)) => named_quandle(spec, caps),
        _ => Err(CliError::config("provide exactly one of --target or --named")),
    }
}

/// Surfaces the domain error behind a serde failure when there is one,
/// otherwise reports the JSON syntax problem.
fn json_error(path: &str, e: serde_json::Error) -> CliError {
    CliError::Io { path: path.to_string(), message: e.to_string() }
}

enum DiagramInput {
    Diagram(LinkoidDiagram),
    Presentation(QuandlePresentation),
}

/// Loads a diagram or presentation file, in text or JSON form, deciding by
/// shape: `open:`/`closed:` lines are codes, `gens:`/`rel:`/`base:` lines
/// are presentations, JSON objects are told apart by their keys.
fn load_diagram_input(path: &str) -> Result<DiagramInput, CliError> {
    let text = read_file(path)?;
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| json_error(path, e))?;
        if value.get("components").is_some() {
            let d = serde_json::from_value::<LinkoidDiagram>(value)
                .map_err(|e| json_error(path, e))?;
            return Ok(DiagramInput::Diagram(d));
        }
        if value.get("generators").is_some() {
            let p = serde_json::from_value::<QuandlePresentation>(value)
                .map_err(|e| json_error(path, e))?;
            return Ok(DiagramInput::Presentation(p));
        }
        return Err(CliError::config(format!(
            "{path}: JSON object has neither \"components\" nor \"generators\""
        )));
    }
    if trimmed.starts_with("gens:") || trimmed.starts_with("rel:") || trimmed.starts_with("base:")
    {
        Ok(DiagramInput::Presentation(parse_presentation(&text)?))
    } else {
        Ok(DiagramInput::Diagram(parse_diagram(&text)?))
    }
}

fn load_presentation(path: &str) -> Result<QuandlePresentation, CliError> {
    match load_diagram_input(path)? {
        DiagramInput::Presentation(p) => Ok(p),
        DiagramInput::Diagram(d) => Ok(fundamental_presentation(&d)),
    }
}

fn print_diagram(d: &LinkoidDiagram, format: Format) {
    match format {
        Format::Json => println!("{}", to_json(d)),
        _ => print!("{}", d.render()),
    }
}

fn print_presentation(p: &QuandlePresentation, format: Format) {
    match format {
        Format::Json => println!("{}", to_json(p)),
        _ => print!("{}", p.render()),
    }
}

/// Maps the ordinal of an open component to its index in the component
/// list.
fn open_component_index(d: &LinkoidDiagram, ordinal: usize) -> Result<usize, CliError> {
    d.components()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.kind == ComponentKind::Open)
        .map(|(i, _)| i)
        .nth(ordinal)
        .ok_or(CliError::Domain(quandloid::Error::NotOpenComponent { index: ordinal }))
}

/// The unvalidated shape of a quandle file, so `validate` can report axiom
/// failures as a verdict rather than a load error.
#[derive(serde::Deserialize)]
struct RawQuandleFile {
    size: usize,
    table: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct ValidationReport {
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<Violation>,
}

#[derive(Serialize)]
struct Violation {
    code: String,
    message: String,
}

#[derive(Serialize)]
struct AnalyzeReport {
    size: usize,
    table: Vec<Vec<usize>>,
    aut_order: usize,
    inn_order: usize,
    components: Vec<Vec<usize>>,
    faithful: bool,
    connected: bool,
    homogeneous: bool,
    cyclic_type: bool,
    two_point_homogeneous: bool,
    /// `[n, d_n]` pairs for n = 1..=arity cap.
    class_counts: Vec<(usize, u64)>,
    n_homogeneous: Vec<(usize, bool)>,
    uniform: bool,
}

pub fn run_quandle(command: QuandleCommand, caps: &Caps) -> CmdResult {
    match command {
        QuandleCommand::Validate { input, format } => {
            // read the raw table first so axiom failures are reported as a
            // verdict with a witness, not as unreadable input
            let outcome = match (&input.r#in, &input.named) {
                (Some(path), None) => {
                    let text = read_file(path)?;
                    let raw: RawQuandleFile =
                        serde_json::from_str(&text).map_err(|e| json_error(path, e))?;
                    FiniteQuandle::new(raw.size, raw.table).map(|_| ())
                }
                (None, Some(spec)) => match named_quandle(spec, caps) {
                    Ok(_) => Ok(()),
                    Err(CliError::Domain(d)) => Err(d),
                    Err(other) => return Err(other),
                },
                _ => return Err(CliError::config("provide exactly one of --in or --named")),
            };
            let report = match outcome {
                Ok(()) => ValidationReport { valid: true, violation: None },
                Err(domain) => ValidationReport {
                    valid: false,
                    violation: Some(Violation {
                        code: domain.code().to_string(),
                        message: domain.to_string(),
                    }),
                },
            };
            match format {
                Format::Json => println!("{}", to_json(&report)),
                _ => match &report.violation {
                    None => println!("valid"),
                    Some(v) => println!("invalid: {}", v.message),
                },
            }
            Ok(if report.valid { 0 } else { 1 })
        }
        QuandleCommand::Analyze { input, format } => {
            let q = load_quandle(&input, caps)?;
            let aut = q.automorphism_group_capped(caps.group)?;
            let class_counts: Vec<(usize, u64)> = (1..=caps.arity)
                .map(|n| {
                    let count = class_count_burnside_capped(&q, n, caps.group)
                        .expect("group already computed under the cap");
                    (n, u64::try_from(&count).expect("counts fit in u64 at cap sizes"))
                })
                .collect();
            let n_homogeneous: Vec<(usize, bool)> = (1..=caps.arity)
                .map(|n| (n, is_n_homogeneous_capped(&q, n, caps.group).unwrap()))
                .collect();
            let report = AnalyzeReport {
                size: q.size(),
                table: q.table().to_vec(),
                aut_order: aut.order(),
                inn_order: q.inner_group().order(),
                components: q.algebraic_components(),
                faithful: q.is_faithful(),
                connected: q.is_connected(),
                homogeneous: aut.is_transitive(),
                cyclic_type: q.is_cyclic_type(),
                two_point_homogeneous: quandloid::is_two_point_homogeneous(&q),
                class_counts,
                n_homogeneous,
                uniform: is_uniform_capped(&q, caps.group)?,
            };
            match format {
                Format::Json => println!("{}", to_json(&report)),
                _ => {
                    println!("size: {}", report.size);
                    println!("aut order: {}", report.aut_order);
                    println!("inn order: {}", report.inn_order);
                    let blocks: Vec<String> = report
                        .components
                        .iter()
                        .map(|b| {
                            let inner: Vec<String> = b.iter().map(usize::to_string).collect();
                            format!("{{{}}}", inner.join(" "))
                        })
                        .collect();
                    println!("components: {}", blocks.join(" "));
                    println!("faithful: {}", report.faithful);
                    println!("connected: {}", report.connected);
                    println!("homogeneous: {}", report.homogeneous);
                    println!("cyclic type: {}", report.cyclic_type);
                    println!("two-point homogeneous: {}", report.two_point_homogeneous);
                    for (n, count) in &report.class_counts {
                        println!("d_{n}: {count}");
                    }
                    for (n, flag) in &report.n_homogeneous {
                        println!("{n}-homogeneous: {flag}");
                    }
                    println!("uniform: {}", report.uniform);
                }
            }
            Ok(0)
        }
        QuandleCommand::Enumerate { order, format } => {
            if order > caps.census {
                return Err(CliError::Domain(quandloid::Error::SizeCapExceeded {
                    what: "census order",
                    size: order,
                    cap: caps.census,
                }));
            }
            for q in enumerate_quandles(order)? {
                match format {
                    Format::Json => println!("{}", to_json(&q)),
                    _ => println!("{}", serde_json::to_string(q.table()).unwrap()),
                }
            }
            Ok(0)
        }
    }
}

pub fn run_diagram(command: DiagramCommand, _caps: &Caps) -> CmdResult {
    match command {
        DiagramCommand::Parse { r#in, format } => {
            match load_diagram_input(&r#in)? {
                DiagramInput::Diagram(d) => print_diagram(&d, format),
                DiagramInput::Presentation(p) => print_presentation(&p, format),
            }
            Ok(0)
        }
        DiagramCommand::Presentation { r#in, format, simplify } => {
            let p = load_presentation(&r#in)?;
            let p = if simplify { p.tietze_eliminate() } else { p };
            print_presentation(&p, format);
            Ok(0)
        }
        DiagramCommand::OmegaMinus { r#in, component, end, over, sign, format } => {
            match load_diagram_input(&r#in)? {
                DiagramInput::Diagram(d) => {
                    let index = open_component_index(&d, component)?;
                    let moved = d.apply_omega_minus(index, end, &over, sign)?;
                    print_diagram(&moved, format);
                }
                DiagramInput::Presentation(p) => {
                    let moved = p.omega_minus(component, end, &over, sign)?;
                    print_presentation(&moved, format);
                }
            }
            Ok(0)
        }
        DiagramCommand::R1 { r#in, component, gap, sign, under_first, format } => {
            let DiagramInput::Diagram(d) = load_diagram_input(&r#in)? else {
                return Err(CliError::config("r1 rewrites diagram codes, not presentations"));
            };
            print_diagram(&d.apply_r1(component, gap, sign, !under_first)?, format);
            Ok(0)
        }
        DiagramCommand::R2 { r#in, component_a, gap_a, component_b, gap_b, sign, format } => {
            let DiagramInput::Diagram(d) = load_diagram_input(&r#in)? else {
                return Err(CliError::config("r2 rewrites diagram codes, not presentations"));
            };
            print_diagram(&d.apply_r2(component_a, gap_a, component_b, gap_b, sign)?, format);
            Ok(0)
        }
        DiagramCommand::Closure { r#in, shortcut, format } => {
            let p = load_presentation(&r#in)?;
            let closed = p.add_closure_relation(&parse_shortcut(&shortcut)?)?;
            print_presentation(&closed, format);
            Ok(0)
        }
    }
}

/// `"b+,c-"` -> `[(b, +), (c, -)]`; the empty string is the empty shortcut.
fn parse_shortcut(text: &str) -> Result<Vec<(String, Sign)>, CliError> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (arc, sign) = item.split_at(item.len() - 1);
        let sign = match sign {
            "+" => Sign::Positive,
            "-" => Sign::Negative,
            _ => {
                return Err(CliError::config(format!(
                    "shortcut item {item:?} must end in '+' or '-'"
                )))
            }
        };
        if arc.is_empty() {
            return Err(CliError::config(format!("shortcut item {item:?} is missing an arc")));
        }
        out.push((arc.to_string(), sign));
    }
    Ok(out)
}

pub fn run_color(command: ColorCommand, caps: &Caps) -> CmdResult {
    match command {
        ColorCommand::Count { pres, target, format } => {
            let p = load_presentation(&pres)?;
            let q = load_target(&target, caps)?;
            let count = counting_invariant(&p, &q);
            match format {
                Format::Json => println!("{}", to_json(&serde_json::json!({ "count": count }))),
                _ => println!("{count}"),
            }
            Ok(0)
        }
        ColorCommand::Matrix { pres, target, link_type, format } => {
            let p = load_presentation(&pres)?;
            let q = load_target(&target, caps)?;
            let matrix = counting_matrix(&p, &q)?;
            let report = matrix_report(&matrix, link_type);
            match format {
                Format::Json => println!("{}", to_json(&report)),
                Format::Csv => print!("{}", matrix.csv()),
                Format::Text => {
                    for row in matrix.entries() {
                        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
                        println!("{}", cells.join(" "));
                    }
                    println!("trace: {}", report.trace);
                    println!("sum: {}", report.sum);
                }
            }
            Ok(0)
        }
        ColorCommand::Profile { pres, pointed, targets, format } => {
            let p = load_presentation(&pres)?;
            let mut battery: Vec<PointedQuandle> = pointed
                .iter()
                .map(|spec| pointed_target(spec, caps))
                .collect::<Result<_, _>>()?;
            if let Some(path) = &targets {
                let text = read_file(path)?;
                let from_file: Vec<PointedQuandle> =
                    serde_json::from_str(&text).map_err(|e| json_error(path, e))?;
                battery.extend(from_file);
            }
            if battery.is_empty() {
                battery = default_battery(caps)?;
            }
            let profile = pointed_profile(&p, &battery)?;
            match format {
                Format::Json => println!("{}", to_json(&profile)),
                _ => {
                    let cells: Vec<String> = profile.iter().map(u64::to_string).collect();
                    println!("{}", cells.join(" "));
                }
            }
            Ok(0)
        }
    }
}

/// Default profiling battery: every basepoint pair of every census quandle
/// of order <= 4, in census order.
fn default_battery(caps: &Caps) -> Result<Vec<PointedQuandle>, CliError> {
    let mut battery = Vec::new();
    for order in 1..=4.min(caps.census) {
        for q in enumerate_quandles(order)? {
            for i in 0..q.size() {
                for j in 0..q.size() {
                    battery.push(PointedQuandle::new(q.clone(), vec![i, j])?);
                }
            }
        }
    }
    Ok(battery)
}

#[derive(Serialize)]
struct DtableRow {
    m: u64,
    n: u64,
    k: String,
    value: String,
}

pub fn run_dtable(args: DtableArgs) -> CmdResult {
    let ks: Vec<Cardinality> = args
        .k
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<Cardinality>().map_err(CliError::Config))
        .collect::<Result<_, _>>()?;
    if ks.is_empty() {
        return Err(CliError::config("--k needs at least one value"));
    }
    let mut rows = Vec::new();
    let mut omitted = 0usize;
    for &k in &ks {
        for m in 0..=args.m_max {
            if let Cardinality::Finite(kv) = k {
                if m > kv {
                    omitted += args.n_max as usize + 1;
                    continue;
                }
            }
            for n in 0..=args.n_max {
                let value = partition_count(m, n, k)?;
                rows.push(DtableRow { m, n, k: k.to_string(), value: value.to_string() });
            }
        }
    }
    match args.format {
        Format::Json => println!("{}", to_json(&rows)),
        _ => {
            println!("m,n,k,value");
            for row in &rows {
                println!("{},{},{},{}", row.m, row.n, row.k, row.value);
            }
        }
    }
    if omitted > 0 {
        eprintln!("note: omitted {omitted} rows with m > k");
    }
    Ok(0)
}

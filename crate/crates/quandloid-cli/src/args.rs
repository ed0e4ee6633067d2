use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "quandloid",
    about = "Quandle invariants of knotoids and linkoids",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Work with finite quandle tables
    Quandle {
        #[command(subcommand)]
        command: QuandleCommand,
    },
    /// Parse and rewrite linkoid diagram codes and presentations
    Diagram {
        #[command(subcommand)]
        command: DiagramCommand,
    },
    /// Count colorings of a presentation into finite quandles
    Color {
        #[command(subcommand)]
        command: ColorCommand,
    },
    /// Tabulate the tuple-pattern counts d(m, n, k)
    Dtable(DtableArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
pub struct QuandleInput {
    /// Path to a quandle JSON file {"size": k, "table": [[...], ...]}
    #[arg(long, value_name = "FILE", conflicts_with = "named")]
    pub r#in: Option<String>,
    /// Named quandle: t<n>, r<n>, v3, tet4, or census:<order>:<index>
    #[arg(long, value_name = "SPEC")]
    pub named: Option<String>,
}

#[derive(Subcommand)]
pub enum QuandleCommand {
    /// Check the three quandle axioms, reporting the first violation
    Validate {
        #[command(flatten)]
        input: QuandleInput,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Structural summary: groups, components, predicates, class counts
    Analyze {
        #[command(flatten)]
        input: QuandleInput,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// List the isomorphism classes of a given order, one per line
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Subcommand)]
pub enum DiagramCommand {
    /// Parse and normalize a diagram code
    Parse {
        #[arg(long, value_name = "FILE")]
        r#in: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Derive the presentation of a diagram: one generator per arc, one
    /// relation per crossing, basepoints at the open ends
    Presentation {
        #[arg(long, value_name = "FILE")]
        r#in: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Drop redundant generators from the result
        #[arg(long)]
        simplify: bool,
    },
    /// Slide an endpoint under a strand (accepts a diagram or a
    /// presentation; the fundamental quandle is unchanged)
    OmegaMinus {
        #[arg(long, value_name = "FILE")]
        r#in: String,
        /// Which open component to move, counting open components from 0
        #[arg(long, default_value_t = 0)]
        component: usize,
        #[arg(long, value_parser = parse_end)]
        end: quandloid::End,
        /// Arc (diagram input) or generator (presentation input) to slide under
        #[arg(long, value_name = "ARC")]
        over: String,
        #[arg(long, value_parser = parse_sign, default_value = "+")]
        sign: quandloid::Sign,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Insert a kink (a crossing traversed twice by one strand)
    R1 {
        #[arg(long, value_name = "FILE")]
        r#in: String,
        #[arg(long, default_value_t = 0)]
        component: usize,
        /// Passage gap: 0 = before the first passage, len = after the last
        #[arg(long)]
        gap: usize,
        #[arg(long, value_parser = parse_sign, default_value = "+")]
        sign: quandloid::Sign,
        /// Traverse the new crossing under-then-over instead of over-then-under
        #[arg(long)]
        under_first: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Slide one strand over another (two new crossings of opposite sign)
    R2 {
        #[arg(long, value_name = "FILE")]
        r#in: String,
        #[arg(long)]
        component_a: usize,
        #[arg(long)]
        gap_a: usize,
        #[arg(long)]
        component_b: usize,
        #[arg(long)]
        gap_b: usize,
        #[arg(long, value_parser = parse_sign, default_value = "+")]
        sign: quandloid::Sign,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Close the open component along a shortcut, adding the closing
    /// relation and clearing the basepoints
    Closure {
        #[arg(long, value_name = "FILE")]
        r#in: String,
        /// Comma-separated under-passes, e.g. "b+,c-"; empty for link-type
        #[arg(long, default_value = "")]
        shortcut: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Args)]
pub struct TargetInput {
    /// Path to a quandle JSON file to color into
    #[arg(long, value_name = "FILE", conflicts_with = "named")]
    pub target: Option<String>,
    /// Named target: t<n>, r<n>, v3, tet4, or census:<order>:<index>
    #[arg(long, value_name = "SPEC")]
    pub named: Option<String>,
}

#[derive(Subcommand)]
pub enum ColorCommand {
    /// Count all colorings, ignoring basepoints
    Count {
        /// Presentation (or diagram) file
        #[arg(long, value_name = "FILE")]
        pres: String,
        #[command(flatten)]
        target: TargetInput,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The matrix of pointed counts over all basepoint pairs, with checks
    Matrix {
        #[arg(long, value_name = "FILE")]
        pres: String,
        #[command(flatten)]
        target: TargetInput,
        /// Assert that the endpoints share a region, enabling the
        /// trace-as-closure and faithfulness checks
        #[arg(long)]
        link_type: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Pointed counts across a battery of pointed targets
    Profile {
        #[arg(long, value_name = "FILE")]
        pres: String,
        /// Pointed target spec <named>:<b1>,<b2>,... (repeatable)
        #[arg(long = "pointed", value_name = "SPEC")]
        pointed: Vec<String>,
        /// JSON file holding an array of pointed quandles
        #[arg(long, value_name = "FILE")]
        targets: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Args)]
pub struct DtableArgs {
    #[arg(long, default_value_t = 3)]
    pub m_max: u64,
    #[arg(long, default_value_t = 6)]
    pub n_max: u64,
    /// Comma-separated list of k values; integers or "unbounded"
    #[arg(long, default_value = "unbounded")]
    pub k: String,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

fn parse_sign(s: &str) -> Result<quandloid::Sign, String> {
    match s {
        "+" | "positive" | "1" => Ok(quandloid::Sign::Positive),
        "-" | "negative" | "-1" => Ok(quandloid::Sign::Negative),
        other => Err(format!("expected '+' or '-', got {other:?}")),
    }
}

fn parse_end(s: &str) -> Result<quandloid::End, String> {
    match s {
        "leg" => Ok(quandloid::End::Leg),
        "head" => Ok(quandloid::End::Head),
        other => Err(format!("expected 'leg' or 'head', got {other:?}")),
    }
}

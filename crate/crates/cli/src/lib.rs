//! Command-line front end for `topaut-core`.
//!
//! Exit codes: 0 success or check passed, 1 violations found, 2 input or
//! precondition error (including usage errors).

pub mod export;

use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use topaut_core::language::{membership, parse_spec_file, Dfa, LanguageSpec, Presentation, Word};
use topaut_core::monoid::{
    context_classes, growth_profile, idempotent_power, syntactic_monoid_capped,
    transition_monoid_capped, FiniteMonoid, Transformation, DEFAULT_MONOID_CAP,
};
use topaut_core::recognition::{
    check_morphism, induced_hom, minimal_monoid_hom, minimization_morphism_with,
    verify_recognition, AutomatonMorphism, HomViolation, MonoidHom, MorphismOptions, Violation,
};
use topaut_core::shift::{champernowne_prefix, dense_prefix_length, density_check, BitStream};
use topaut_core::topology::{
    is_strongly_connected, nerode_classes, orbit_closure_report, residual_truncation,
    stabilization_check, StabilizationVerdict,
};
use topaut_core::Error;

pub use export::{approx_dot, dfa_dot, export_json};

/// Environment variable overriding the monoid size cap.
pub const MONOID_CAP_ENV: &str = "TOPAUT_MONOID_CAP";

/// Largest prefix searched by `density` when `--prefix` is absent.
const DENSITY_SEARCH_LIMIT: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "topaut", version, about = "Topological automata toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Spec file path, or an inline spec with " / " between lines
    #[arg(long, global = true)]
    pub spec: Option<String>,
    /// Source automaton for morphism and induced-hom (a dfa or regex spec)
    #[arg(long, global = true)]
    pub source: Option<String>,
    /// Truncation depth
    #[arg(long, global = true, default_value_t = 3)]
    pub depth: usize,
    /// Enumeration horizon (longest word enumerated)
    #[arg(long, global = true, default_value_t = 8)]
    pub horizon: usize,
    /// Word-length bound for bounded checks
    #[arg(long, global = true, default_value_t = 12)]
    pub bound: usize,
    /// Window length (density) or largest context bound (growth)
    #[arg(long, global = true)]
    pub k: Option<usize>,
    /// Prefix length of the bit sequence
    #[arg(long, global = true)]
    pub prefix: Option<usize>,
    /// Left context bound
    #[arg(long, global = true, default_value_t = 1)]
    pub left: usize,
    /// Right context bound
    #[arg(long, global = true, default_value_t = 1)]
    pub right: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Input word (may be empty)
    #[arg(long, global = true)]
    pub word: Option<String>,
    /// Image of one alphabet symbol as a transformation, e.g. "1,0"; repeat once per symbol
    #[arg(long, global = true)]
    pub transform: Vec<String>,
    /// Use the cyclic group of this order, every symbol mapped to its generator
    #[arg(long, global = true)]
    pub cyclic: Option<usize>,
    /// Accepting monoid elements by index, comma-separated
    #[arg(long, global = true, value_delimiter = ',')]
    pub accept: Vec<usize>,
    /// Maximum monoid size before giving up
    #[arg(long, global = true, env = MONOID_CAP_ENV, default_value_t = DEFAULT_MONOID_CAP)]
    pub monoid_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Decide whether --word belongs to the language
    Membership,
    /// Minimal DFA of a rational spec
    Minimize,
    /// Depth-d residual truncation of χ_L at --word
    Residual,
    /// Depth-d Nerode quotient of the orbit
    Nerode,
    /// Compare depths d and d+1
    Stabilize,
    /// Pattern statistics for the orbit closure
    Closure,
    /// Transition monoid of the presented DFA
    Monoid,
    /// Syntactic monoid and accepting set
    Syntactic,
    /// Idempotent power of every element of the presented DFA's transition monoid
    Idempotents,
    /// Two-sided context classes at (--left, --right)
    Contexts,
    /// Context class counts for k = 1..=--k
    Growth,
    /// Minimization morphism from --source onto the minimal automaton
    Morphism,
    /// Monoid homomorphism induced by the minimization morphism
    InducedHom,
    /// Check that a monoid and accepting set recognize the language
    Recognize,
    /// Homomorphism from a recognizing monoid onto the syntactic monoid
    MinHom,
    /// Prefix of the concatenated length-lex enumeration (or of χ_L for --spec)
    Champernowne,
    /// Check that every length-k pattern occurs in a prefix
    Density,
    /// Strong connectivity of the presented DFA
    Connected,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Membership => "membership",
            Command::Minimize => "minimize",
            Command::Residual => "residual",
            Command::Nerode => "nerode",
            Command::Stabilize => "stabilize",
            Command::Closure => "closure",
            Command::Monoid => "monoid",
            Command::Syntactic => "syntactic",
            Command::Idempotents => "idempotents",
            Command::Contexts => "contexts",
            Command::Growth => "growth",
            Command::Morphism => "morphism",
            Command::InducedHom => "induced-hom",
            Command::Recognize => "recognize",
            Command::MinHom => "min-hom",
            Command::Champernowne => "champernowne",
            Command::Density => "density",
            Command::Connected => "connected",
        }
    }

    fn supports_dot(self) -> bool {
        matches!(self, Command::Minimize | Command::Nerode | Command::Stabilize | Command::Connected)
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `args` (including the program name) and run.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match execute(cli) {
        Ok(Emitted { text, violations }) => {
            Outcome { code: i32::from(violations), stdout: text, stderr: String::new() }
        }
        Err(e) => {
            let code = match e {
                Error::RecognitionMismatch { .. } | Error::IllDefined { .. } => 1,
                _ => 2,
            };
            Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

struct Emitted {
    text: String,
    violations: bool,
}

impl Emitted {
    fn json<T: Serialize + ?Sized>(kind: &str, value: &T) -> Self {
        Emitted { text: export_json(kind, value), violations: false }
    }

    fn failing_if(mut self, violations: bool) -> Self {
        self.violations = violations;
        self
    }
}

fn input(message: impl Into<String>) -> Error {
    Error::Input(message.into())
}

/// Reads `arg` as a file if one exists at that path, else as inline text.
pub fn load_spec(arg: &str) -> topaut_core::Result<LanguageSpec> {
    let path = Path::new(arg);
    let text = if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| input(format!("{arg}: {e}")))?
    } else {
        arg.replace(" / ", "\n")
    };
    parse_spec_file(&text)
}

fn presented_dfa(spec: &LanguageSpec) -> topaut_core::Result<Dfa> {
    match spec.presentation() {
        Presentation::Dfa(dfa) | Presentation::Regex { dfa, .. } => Ok(dfa.clone()),
        Presentation::Oracle { .. } => Err(Error::UnsupportedPresentation(
            "this command needs a regex or dfa presentation".into(),
        )),
    }
}

fn transformation(text: &str) -> topaut_core::Result<Transformation> {
    let images = text
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| input(format!("bad transformation {text:?}"))))
        .collect::<topaut_core::Result<Vec<_>>>()?;
    Transformation::new(images)
}

#[derive(Serialize)]
struct DfaOut<'a> {
    states: usize,
    spec: String,
    #[serde(flatten)]
    dfa: &'a Dfa,
}

#[derive(Serialize)]
struct MonoidOut<'a> {
    order: usize,
    #[serde(flatten)]
    monoid: &'a FiniteMonoid,
}

#[derive(Serialize)]
struct IdempotentRow {
    element: usize,
    witness: Word,
    power: usize,
    power_witness: Word,
}

#[derive(Serialize)]
struct MorphismOut<'a> {
    morphism: &'a AutomatonMorphism,
    violations: Vec<Violation>,
    passed: bool,
}

#[derive(Serialize)]
struct HomOut<'a> {
    hom: &'a MonoidHom,
    violations: Vec<HomViolation>,
    passed: bool,
}

struct Cx<'a> {
    cli: &'a Cli,
}

impl Cx<'_> {
    fn spec(&self) -> topaut_core::Result<LanguageSpec> {
        let arg = self.cli.spec.as_deref().ok_or_else(|| input("--spec is required"))?;
        load_spec(arg)
    }

    fn word(&self) -> topaut_core::Result<Word> {
        self.cli.word.as_deref().map(Word::from).ok_or_else(|| input("--word is required"))
    }

    fn k(&self) -> topaut_core::Result<usize> {
        self.cli.k.ok_or_else(|| input("--k is required"))
    }

    /// The monoid given by --transform or --cyclic, with the image of each symbol.
    fn monoid(&self, spec: &LanguageSpec) -> topaut_core::Result<(FiniteMonoid, Vec<usize>)> {
        let k = spec.alphabet().len();
        match (self.cli.cyclic, self.cli.transform.is_empty()) {
            (Some(n), true) => {
                if n == 0 {
                    return Err(input("--cyclic needs a positive order"));
                }
                let m = FiniteMonoid::cyclic_group(n);
                let g = m.generator(0);
                Ok((m, vec![g; k]))
            }
            (None, false) => {
                let gens = self
                    .cli
                    .transform
                    .iter()
                    .map(|t| transformation(t))
                    .collect::<topaut_core::Result<Vec<_>>>()?;
                let m = FiniteMonoid::generated(spec.alphabet().clone(), gens, self.cli.monoid_cap)?;
                let images = m.generators().to_vec();
                Ok((m, images))
            }
            _ => Err(input("give exactly one of --cyclic or --transform (once per symbol)")),
        }
    }

    fn accepting(&self, monoid: &FiniteMonoid) -> topaut_core::Result<Vec<usize>> {
        if let Some(&bad) = self.cli.accept.iter().find(|&&e| e >= monoid.order()) {
            return Err(input(format!("--accept element {bad} exceeds monoid order {}", monoid.order())));
        }
        Ok(self.cli.accept.clone())
    }
}

fn execute(cli: &Cli) -> topaut_core::Result<Emitted> {
    let cmd = cli.command;
    if cli.format == Format::Dot && !cmd.supports_dot() {
        return Err(input(format!("{} has no dot output", cmd.name())));
    }
    let cx = Cx { cli };
    let dot = cli.format == Format::Dot;
    Ok(match cmd {
        Command::Membership => {
            let spec = cx.spec()?;
            let word = cx.word()?;
            let member = membership(&spec, &word)?;
            Emitted::json("membership", &serde_json::json!({ "word": word, "member": member }))
        }
        Command::Minimize => {
            let min = cx.spec()?.minimal_dfa()?;
            if dot {
                Emitted { text: dfa_dot(&min), violations: false }
            } else {
                let spec = LanguageSpec::dfa(min.clone()).to_spec_text();
                Emitted::json("dfa", &DfaOut { states: min.num_states(), spec, dfa: &min })
            }
        }
        Command::Residual => {
            let point = residual_truncation(&cx.spec()?, &cx.word()?, cli.depth)?;
            Emitted::json("residual", &point)
        }
        Command::Nerode => {
            let approx = nerode_classes(&cx.spec()?, cli.depth, cli.horizon)?;
            if dot {
                Emitted { text: approx_dot(&approx), violations: false }
            } else {
                Emitted::json("nerode", &approx)
            }
        }
        Command::Stabilize => {
            let verdict = stabilization_check(&cx.spec()?, cli.depth, cli.horizon)?;
            match (&verdict, dot) {
                (StabilizationVerdict::Stabilized { quotient, .. }, true) => {
                    Emitted { text: dfa_dot(quotient), violations: false }
                }
                (StabilizationVerdict::Growing { .. }, true) => {
                    return Err(input("no quotient to draw: the partition is still growing"));
                }
                _ => Emitted::json("stabilization", &verdict),
            }
        }
        Command::Closure => {
            Emitted::json("closure", &orbit_closure_report(&cx.spec()?, cli.depth, cli.horizon)?)
        }
        Command::Monoid => {
            let m = transition_monoid_capped(&presented_dfa(&cx.spec()?)?, cli.monoid_cap)?;
            Emitted::json("monoid", &MonoidOut { order: m.order(), monoid: &m })
        }
        Command::Syntactic => {
            let s = syntactic_monoid_capped(&cx.spec()?, cli.monoid_cap)?;
            Emitted::json(
                "syntactic",
                &serde_json::json!({
                    "order": s.monoid.order(),
                    "accepting": s.accepting,
                    "monoid": s.monoid,
                    "minimal_dfa": s.minimal_dfa,
                }),
            )
        }
        Command::Idempotents => {
            let m = transition_monoid_capped(&presented_dfa(&cx.spec()?)?, cli.monoid_cap)?;
            let rows: Vec<IdempotentRow> = (0..m.order())
                .map(|s| {
                    let e = idempotent_power(&m, s);
                    IdempotentRow {
                        element: s,
                        witness: m.witness(s).clone(),
                        power: e,
                        power_witness: m.witness(e).clone(),
                    }
                })
                .collect();
            let idempotents: Vec<usize> = (0..m.order()).filter(|&s| m.is_idempotent(s)).collect();
            Emitted::json(
                "idempotents",
                &serde_json::json!({ "order": m.order(), "elements": rows, "idempotents": idempotents }),
            )
        }
        Command::Contexts => {
            Emitted::json("contexts", &context_classes(&cx.spec()?, cli.left, cli.right, cli.bound)?)
        }
        Command::Growth => {
            let k = cli.k.unwrap_or(3);
            Emitted::json("growth", &growth_profile(&cx.spec()?, k, cli.bound)?)
        }
        Command::Morphism | Command::InducedHom => {
            let source_arg = cli.source.as_deref().ok_or_else(|| input("--source is required"))?;
            let source_spec = load_spec(source_arg)?;
            let source = presented_dfa(&source_spec)?;
            let spec = match &cli.spec {
                Some(_) => cx.spec()?,
                None => source_spec,
            };
            let options = MorphismOptions { bound: cli.bound, depth: cli.depth, horizon: cli.horizon };
            let phi = minimization_morphism_with(&source, &spec, options)?;
            if cmd == Command::Morphism {
                let violations = check_morphism(&phi).violations;
                let passed = violations.is_empty();
                Emitted::json("morphism", &MorphismOut { morphism: &phi, violations, passed })
                    .failing_if(!passed)
            } else {
                let hom = induced_hom(&phi)?;
                hom_output(&hom)
            }
        }
        Command::Recognize => {
            let spec = cx.spec()?;
            let (m, images) = cx.monoid(&spec)?;
            let accepting = cx.accepting(&m)?;
            let report = verify_recognition(&m, &images, &accepting, &spec, cli.bound)?;
            let passed = report.passed();
            Emitted::json("recognition", &report).failing_if(!passed)
        }
        Command::MinHom => {
            let spec = cx.spec()?;
            let (m, images) = cx.monoid(&spec)?;
            let accepting = cx.accepting(&m)?;
            hom_output(&minimal_monoid_hom(&m, &images, &accepting, &spec, cli.bound)?)
        }
        Command::Champernowne => {
            let n = cli.prefix.unwrap_or(10);
            let prefix = match &cli.spec {
                None => champernowne_prefix(n),
                Some(_) => BitStream::from_spec(cx.spec()?)?
                    .prefix(n)
                    .iter()
                    .map(|&b| if b { '1' } else { '0' })
                    .collect(),
            };
            Emitted::json("prefix", &serde_json::json!({ "length": n, "prefix": prefix }))
        }
        Command::Density => {
            let k = cx.k()?;
            let stream = match &cli.spec {
                None => BitStream::champernowne(),
                Some(_) => BitStream::from_spec(cx.spec()?)?,
            };
            let n = match cli.prefix {
                Some(n) => n,
                None => dense_prefix_length(&stream, k, DENSITY_SEARCH_LIMIT).unwrap_or(DENSITY_SEARCH_LIMIT),
            };
            let report = density_check(&stream, k, n)?;
            let passed = report.passed;
            Emitted::json("density", &report).failing_if(!passed)
        }
        Command::Connected => {
            let dfa = presented_dfa(&cx.spec()?)?;
            if dot {
                Emitted { text: dfa_dot(&dfa), violations: false }
            } else {
                Emitted::json(
                    "connected",
                    &serde_json::json!({
                        "states": dfa.num_states(),
                        "strongly_connected": is_strongly_connected(&dfa),
                    }),
                )
            }
        }
    })
}

fn hom_output(hom: &MonoidHom) -> Emitted {
    let violations = hom.verify();
    let passed = violations.is_empty();
    Emitted::json("hom", &HomOut { hom, violations, passed }).failing_if(!passed)
}

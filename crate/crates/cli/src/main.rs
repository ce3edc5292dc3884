mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use vogan_core::catalog::root_realization;
use vogan_core::engine::{self, orbit_cap_from_env, Circling};
use vogan_core::family::parse_rational;
use vogan_core::payload::{self, DiagramSource, Resolved};
use vogan_core::{list_families, Diagram, Error, Family, FamilySpec, NodeId, Parity, Result};

/// Vogan superdiagrams and the push-the-button calculus.
///
/// Results are printed to stdout as JSON, explanations to stderr. Exit
/// codes: 2 invalid input, 3 vertex not pressable, 4 circling not
/// admissible, 5 enumeration cap exceeded, 6 address unavailable.
#[derive(Debug, Parser)]
#[command(name = "vogan", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the diagram families and their parameters.
    Families,
    /// Draw a diagram.
    Show {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Circled vertices, e.g. 2,4,9.
        #[arg(long, default_value = "")]
        circle: String,
    },
    /// Press a circled even vertex.
    Press {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        circle: String,
        #[arg(long)]
        at: NodeId,
    },
    /// Reduce an admissible circling to the smallest one in its orbit.
    Reduce {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        circle: String,
    },
    /// List the press orbit of a circling.
    Orbit {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        circle: String,
    },
    /// Find presses turning one circling into another.
    Related {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        c1: String,
        #[arg(long)]
        c2: String,
    },
    /// Decide whether two admissible circlings give the same real form.
    Equivalent {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        c1: String,
        #[arg(long)]
        c2: String,
    },
    /// Group all admissible circlings into real forms.
    Classify {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Check the label parity condition.
    Admissible {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value = "")]
        circle: String,
    },
    /// List the diagram automorphisms.
    Symmetries {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Compare a press with the odd reflection it stands for.
    Reflect {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        circle: String,
        #[arg(long)]
        at: NodeId,
    },
    /// Run the HTTP service.
    Serve {
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Dot,
    Json,
}

#[derive(Debug, Args)]
struct SourceArgs {
    /// Catalog family: SL, B, C, D, D21A, F4, G3.
    #[arg(long, conflicts_with = "diagram")]
    family: Option<String>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    /// Parameter of D(2,1;alpha), a rational such as 2 or -1/3.
    #[arg(long)]
    alpha: Option<String>,
    /// Override the admissibility parity rule: even or odd.
    #[arg(long)]
    parity: Option<String>,
    /// Canonical diagram JSON file; its labels are not checked against a
    /// realization.
    #[arg(long)]
    diagram: Option<PathBuf>,
}

impl SourceArgs {
    fn spec(&self) -> Result<Option<FamilySpec>> {
        let Some(family) = &self.family else { return Ok(None) };
        let family: Family = family.parse()?;
        let alpha = self.alpha.as_deref().map(parse_rational).transpose()?;
        FamilySpec::from_parts(family, self.m, self.n, alpha).map(Some)
    }

    fn resolve(&self) -> Result<Resolved> {
        let mut resolved = match (self.spec()?, &self.diagram) {
            (Some(spec), _) => DiagramSource::catalog(&spec).resolve()?,
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::InvalidParams(format!("cannot read {}: {e}", path.display())))?;
                Resolved { diagram: Diagram::from_json(&text)?, verified: false }
            }
            (None, None) => return Err(Error::InvalidParams("give --family or --diagram".into())),
        };
        if let Some(p) = &self.parity {
            resolved.diagram = resolved.diagram.with_parity_rule(p.parse::<Parity>()?);
        }
        Ok(resolved)
    }
}

fn circling(text: &str) -> Result<Circling> {
    Circling::parse_list(text)
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("payloads serialize"));
}

fn note(r: &Resolved, text: impl AsRef<str>) {
    let flag = if r.verified { "" } else { " [unverified diagram]" };
    eprintln!("{}{flag}: {}", r.diagram.spec(), text.as_ref());
}

fn admissibility(r: &Resolved, c: &Circling) -> &'static str {
    match engine::is_admissible(&r.diagram, c) {
        Ok(true) => "admissible",
        _ => "not admissible",
    }
}

#[derive(Serialize)]
struct OrbitPayload {
    members: Vec<Circling>,
    min_size: usize,
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Families => emit(&list_families()),
        Command::Show { source, format, circle } => {
            let r = source.resolve()?;
            let c = circling(&circle)?;
            c.validate(&r.diagram)?;
            match format {
                Format::Json => println!("{}", r.diagram.to_json()),
                Format::Ascii => print!("{}", render::ascii(&r.diagram, &c)),
                Format::Dot => print!("{}", render::dot(&r.diagram, &c)),
            }
        }
        Command::Press { source, circle, at } => {
            let r = source.resolve()?;
            let c = circling(&circle)?;
            let out = payload::press(&r, &c, at)?;
            note(&r, format!("F_{at}: {c} -> {} ({})", out.circling, admissibility(&r, &out.circling)));
            emit(&out.circling);
        }
        Command::Reduce { source, circle } => {
            let r = source.resolve()?;
            let c = circling(&circle)?;
            let out = payload::reduce(&r, &c)?;
            let bound = engine::odd_removed_components(&r.diagram);
            note(&r, format!("{c} reduces to {} via {:?}; bound {bound}", out.circling, out.steps));
            emit(&out);
        }
        Command::Orbit { source, circle } => {
            let r = source.resolve()?;
            let c = circling(&circle)?;
            let report = engine::f_orbit(&r.diagram, &c)?;
            let mut members = report.members.clone();
            members.sort();
            note(&r, format!("orbit of {c} has {} circlings, smallest {}", members.len(), report.minimum()));
            emit(&OrbitPayload { members, min_size: report.min_size });
        }
        Command::Related { source, c1, c2 } => {
            let r = source.resolve()?;
            let (a, b) = (circling(&c1)?, circling(&c2)?);
            let out = payload::related(&r, &a, &b)?;
            note(&r, if out.related { format!("{a} and {b} are F-related") } else { format!("{a} and {b} are not F-related") });
            emit(&out);
        }
        Command::Equivalent { source, c1, c2 } => {
            let r = source.resolve()?;
            let (a, b) = (circling(&c1)?, circling(&c2)?);
            let out = payload::equivalent(&r, &a, &b)?;
            match &out.symmetry {
                Some(s) => note(&r, format!("{a} and {b} give isomorphic real forms (symmetry {s})")),
                None => note(&r, format!("{a} and {b} give non-isomorphic real forms")),
            }
            emit(&out);
        }
        Command::Classify { source } => {
            let r = source.resolve()?;
            let out = payload::classify(&r, orbit_cap_from_env())?;
            note(&r, format!("{} classes of admissible circlings", out.classes.len()));
            emit(&out);
        }
        Command::Admissible { source, circle } => {
            let r = source.resolve()?;
            let c = circling(&circle)?;
            let out = payload::admissible(&r, &c)?;
            let sum = engine::label_sum(&r.diagram, &c)?;
            note(&r, format!("{c}: label sum {sum}, rule {}", r.diagram.parity_rule()));
            emit(&out);
        }
        Command::Symmetries { source } => {
            let r = source.resolve()?;
            let out = payload::symmetries(&r);
            note(&r, format!("{} automorphisms", out.symmetries.len()));
            emit(&out);
        }
        Command::Reflect { source, circle, at } => {
            let spec = source
                .spec()?
                .ok_or_else(|| Error::InvalidParams("reflect needs a catalog diagram (--family)".into()))?;
            let r = source.resolve()?;
            let realization = root_realization(&spec)?;
            let c = circling(&circle)?;
            let report = engine::reflection_report(&r.diagram, &realization, &c, at)?;
            note(&r, if report.all_ok() { "press agrees with the reflection" } else { "press DISAGREES with the reflection" });
            emit(&report);
        }
        Command::Serve { .. } => unreachable!("handled by serve()"),
    }
    Ok(())
}

fn serve(host: &str, port: u16) -> ExitCode {
    let runtime = match tokio::runtime::Runtime::new() {
        Ok(rt) => rt,
        Err(e) => {
            eprintln!("cannot start runtime: {e}");
            return ExitCode::from(6);
        }
    };
    runtime.block_on(async {
        let listener = match tokio::net::TcpListener::bind((host, port)).await {
            Ok(l) => l,
            Err(e) => {
                eprintln!("cannot listen on {host}:{port}: {e}");
                return ExitCode::from(6);
            }
        };
        let addr = listener.local_addr().map(|a| a.to_string()).unwrap_or_else(|_| format!("{host}:{port}"));
        println!("serving on {addr}");
        let shutdown = async {
            let _ = tokio::signal::ctrl_c().await;
        };
        match vogan_service::serve(listener, vogan_service::Config::default(), shutdown).await {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("server error: {e}");
                ExitCode::from(6)
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Serve { host, port } = &cli.command {
        return serve(host, *port);
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

//! Command-line front end. The binary is a thin wrapper around [`run`].

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::{catalog, lookup};
use crate::contraction::ClaspSign;
use crate::error::Error;
use crate::invariants::q1_whitehead;
use crate::io::{load_linking, load_seifert};
use crate::parse::parse_laurent;
use crate::poly::{LaurentPoly, Rational};
use crate::seifert::SeifertMatrix;
use crate::theta::{bead_form, ThetaElement};

#[derive(Parser, Debug)]
#[command(name = "whitehead", version, about = "Knot invariants from Seifert matrices and the 2-loop invariant of Whitehead doubles")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct KnotSource {
    /// Built-in knot name (see `catalog`)
    #[arg(long)]
    knot: Option<String>,
    /// Seifert matrix file
    #[arg(long)]
    seifert: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Symmetrized Alexander polynomial
    Alexander(KnotSource),
    /// Degree-2 invariant: the h^2 coefficient of Δ(e^h)
    A2(KnotSource),
    /// (1/4)·d²/dh² Δ(e^h) at h = 0
    ACor(KnotSource),
    /// Equivariant linking matrix (t - 1)(tA - A^T)^-1
    Levine(KnotSource),
    /// Canonical form of p (x) q (x) r
    Canon {
        /// Laurent expression for one tensor slot; give exactly three
        #[arg(long = "slot", required = true, allow_hyphen_values = true)]
        slots: Vec<String>,
    },
    /// Contract a 3x3 leaf linking matrix
    Contract {
        #[arg(long)]
        linking: PathBuf,
    },
    /// Q1 of the untwisted Whitehead double
    #[command(name = "q1-wh")]
    Q1Wh {
        #[command(flatten)]
        source: KnotSource,
        /// Clasp sign, +1 or -1
        #[arg(long, allow_hyphen_values = true)]
        eps: ClaspSign,
    },
    /// List built-in knots and their invariants
    Catalog,
}

fn resolve(source: &KnotSource) -> Result<SeifertMatrix, Error> {
    match (&source.knot, &source.seifert) {
        (Some(name), _) => lookup(name)
            .map(|e| e.matrix.clone())
            .ok_or_else(|| Error::Usage(format!("unknown knot `{name}`; see `catalog`"))),
        (None, Some(path)) => Ok(load_seifert(path)?),
        (None, None) => Err(Error::Usage("one of --knot or --seifert is required".into())),
    }
}

fn theta_output(x: &ThetaElement, bead: String, format: Format) -> String {
    match format {
        Format::Text => format!("{x}\nbead: {bead}\n"),
        Format::Json => format!("{}\n", x.to_json()),
    }
}

fn poly_json(p: &LaurentPoly) -> Value {
    let terms: Vec<_> = p
        .terms()
        .rev()
        .map(|(e, c)| json!({ "exp": e, "coeff": c.to_string() }))
        .collect();
    json!({ "poly": p.to_string(), "terms": terms })
}

fn execute(cli: &Cli) -> Result<String, Error> {
    let format = cli.format;
    let scalar = |key: &str, v: Rational| match format {
        Format::Text => format!("{v}\n"),
        Format::Json => format!("{}\n", json!({ key: v.to_string() })),
    };
    Ok(match &cli.command {
        Command::Alexander(src) => {
            let delta = resolve(src)?.alexander();
            match format {
                Format::Text => format!("{delta}\n"),
                Format::Json => format!("{}\n", poly_json(delta.poly())),
            }
        }
        Command::A2(src) => scalar("a2", resolve(src)?.conway_a2()),
        Command::ACor(src) => scalar("a_cor", resolve(src)?.a_corollary()),
        Command::Levine(src) => {
            let b = resolve(src)?.levine_matrix()?;
            match format {
                Format::Text => format!("{b}\n"),
                Format::Json => {
                    let rows: Vec<Vec<String>> = (0..b.rows())
                        .map(|i| b.row(i).iter().map(ToString::to_string).collect())
                        .collect();
                    format!("{}\n", json!({ "rows": rows }))
                }
            }
        }
        Command::Canon { slots } => {
            if slots.len() != 3 {
                return Err(Error::Usage(format!(
                    "canon takes exactly three --slot expressions, got {}",
                    slots.len()
                )));
            }
            let polys = slots
                .iter()
                .map(|s| parse_laurent(s))
                .collect::<Result<Vec<_>, _>>()?;
            let x = ThetaElement::from_tensor(&polys[0], &polys[1], &polys[2]);
            let bead = bead_form(&Rational::from_integer(1.into()), &polys[0], &polys[1], &polys[2]);
            theta_output(&x, bead, format)
        }
        Command::Contract { linking } => {
            let x = load_linking(linking)?.contract();
            let bead = x.bead_string();
            theta_output(&x, bead, format)
        }
        Command::Q1Wh { source, eps } => {
            let knot = resolve(source)?;
            let x = q1_whitehead(&knot, *eps);
            let coeff = Rational::from_integer(eps.value().into()) * knot.a_corollary();
            let one = LaurentPoly::one();
            let bead = bead_form(&coeff, &one, &one, &LaurentPoly::whitehead_bead());
            theta_output(&x, bead, format)
        }
        Command::Catalog => match format {
            Format::Text => {
                let mut s = String::from("name\tseifert\talexander\ta2\ta-cor\n");
                for e in catalog() {
                    s += &format!(
                        "{}\t{}\t{}\t{}\t{}\n",
                        e.name,
                        e.matrix,
                        e.matrix.alexander(),
                        e.matrix.conway_a2(),
                        e.matrix.a_corollary()
                    );
                }
                s
            }
            Format::Json => {
                let entries: Vec<_> = catalog()
                    .iter()
                    .map(|e| {
                        json!({
                            "name": e.name,
                            "seifert": e.matrix.rows(),
                            "alexander": e.matrix.alexander().to_string(),
                            "a2": e.matrix.conway_a2().to_string(),
                            "a_cor": e.matrix.a_corollary().to_string(),
                            "notes": e.notes,
                        })
                    })
                    .collect();
                format!("{}\n", Value::from(entries))
            }
        },
    })
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code: 0 success, 2 usage, 3 parse or validation, 4 math.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

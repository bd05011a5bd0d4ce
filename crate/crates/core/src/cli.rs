//! Command-line surface. Exit codes: 0 success or NOT_SLICE, 2 INCONCLUSIVE, 1 error.

use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand};

use crate::auxiliary::{kprt_f, verify_c7t23_not_slice_in_cp2s, yasuhara_realize, RealizeTarget};
use crate::casework::{certify_not_slice, Declared, Verdict};
use crate::error::{Error, Result};
use crate::exotica::{build_family, framing_search};
use crate::genus::{classes_of_genus_at_most, ruberman_genus};
use crate::homology::HomologyClass;
use crate::io::{emit_certificate, ingest_knot_table, parse_seifert, Format};
use crate::knot::{lt_signature_seifert, RootOfUnity};

#[derive(Parser, Debug)]
#[command(name = "slicecheck", version, about = "Certificates of non-sliceness in CP2#-CP2")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the case analysis for the link with both components K.
    #[command(group(ArgGroup::new("linking").required(true).args(["lk", "twists"])))]
    Certify {
        #[arg(long)]
        knots: PathBuf,
        #[arg(long)]
        knot: String,
        #[arg(long, allow_hyphen_values = true)]
        lk: Option<i64>,
        /// Full twists n; lk = −n.
        #[arg(long, allow_hyphen_values = true)]
        twists: Option<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "json")]
        format: String,
        /// Treat A1 (2·disc) as not declared.
        #[arg(long)]
        no_a1: bool,
        /// Treat A3 (3·disc) as not declared.
        #[arg(long)]
        no_a3: bool,
    },
    /// Minimal genus of (a, b) in CP2#-CP2.
    Genus {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
    /// Classes of genus at most G with |coords| ≤ N.
    Classes {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        bound: i64,
    },
    Framings {
        #[arg(long, allow_hyphen_values = true)]
        lk: i64,
        #[arg(long)]
        bound: i64,
        #[arg(long)]
        allow_indefinite: bool,
    },
    Family {
        #[arg(long)]
        m: i64,
    },
    /// Certificate that #7 T(2,3) bounds no disc in CP2 or -CP2.
    Kprt {
        /// Print f_m(d) instead.
        #[arg(long, requires = "d")]
        m: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        d: Option<i64>,
    },
    Realize {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        #[arg(long, default_value = "s2xs2")]
        target: String,
    },
    /// Levine–Tristram signature at e^{2πi r/m} of a Seifert matrix file ("a,b;c,d" or one row per line).
    Sig {
        #[arg(long)]
        seifert: PathBuf,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        m: i64,
    },
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(&serde_json::to_value(v).expect("serializes")).expect("value serializes")
}

/// Run a parsed command, writing results to `out`. Returns the exit code.
pub fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    let mut say = |s: String| writeln!(out, "{s}").map_err(Error::from);
    match cmd {
        Command::Certify { knots, knot, lk, twists, out: path, format, no_a1, no_a3 } => {
            let format: Format = format.parse()?;
            let lk = lk.unwrap_or_else(|| -twists.expect("clap enforces one of lk/twists"));
            let table = ingest_knot_table(&knots)?;
            let k = table
                .iter()
                .find(|k| k.name == knot)
                .ok_or_else(|| Error::Precondition(format!("knot {knot} not in {}", knots.display())))?;
            let cert = certify_not_slice(k, lk, Declared { a1: !no_a1, a3: !no_a3 });
            let bytes = emit_certificate(&cert, format);
            match path {
                Some(p) => {
                    std::fs::write(&p, &bytes)?;
                    say(format!("{} {} lk={} -> {}", cert.verdict, knot, lk, p.display()))?;
                }
                None => say(String::from_utf8_lossy(&bytes).trim_end().to_string())?,
            }
            for r in &cert.reasons {
                eprintln!("{r}");
            }
            Ok(if cert.verdict == Verdict::NotSlice { 0 } else { 2 })
        }
        Command::Genus { a, b } => {
            say(ruberman_genus(&HomologyClass::pair(a, b)).to_string())?;
            Ok(0)
        }
        Command::Classes { genus, bound } => {
            for c in classes_of_genus_at_most(genus, bound) {
                say(format!("{},{}", c.coords[0], c.coords[1]))?;
            }
            Ok(0)
        }
        Command::Framings { lk, bound, allow_indefinite } => {
            say("f_a,f_b,det_q,parity_ok,rokhlin".into())?;
            for f in framing_search(lk, bound, allow_indefinite)? {
                let rk = f.rokhlin.map(|r| format!("{r:?}").to_lowercase()).unwrap_or_default();
                say(format!("{},{},{},{},{}", f.f_a, f.f_b, f.det_q, f.parity_ok, rk))?;
            }
            Ok(0)
        }
        Command::Family { m } => {
            say(json(&build_family(m)?))?;
            Ok(0)
        }
        Command::Kprt { m: Some(m), d: Some(d) } => {
            say(kprt_f(m, d)?.to_string())?;
            Ok(0)
        }
        Command::Kprt { .. } => {
            let cert = verify_c7t23_not_slice_in_cp2s()?;
            say(json(&cert))?;
            Ok(if cert.obstructed { 0 } else { 2 })
        }
        Command::Realize { a, b, c, target } => {
            let m = yasuhara_realize(a, b, c, target.parse::<RealizeTarget>()?)?;
            for row in m {
                say(row.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))?;
            }
            Ok(0)
        }
        Command::Sig { seifert, r, m } => {
            let text = std::fs::read_to_string(&seifert)?;
            let joined = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .collect::<Vec<_>>()
                .join(";");
            let v = parse_seifert(&joined)?.ok_or_else(|| Error::Parse("empty Seifert matrix".into()))?;
            say(lt_signature_seifert(&v, RootOfUnity::new(r, m)?)?.to_string())?;
            Ok(0)
        }
    }
}

/// Parse argv and run. Usage errors exit 1; --help and --version exit 0.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

//! Configuration resolution and command dispatch.

use std::fs;
use std::str::FromStr;

use hookforge::partition::{partitions_of, Partition};
use hookforge::series::{geom_expand, hook_monomial, ContentMonomial, TruncSeries};
use hookforge::{fock, hook_strip, hooks, partition::HookSide, pp, series, tectonic, Error};
use serde_json::json;

use crate::output::{render_document, write_out};
use crate::{
    Cli, Command, EnumerateCmd, FileConfig, Format, Params, SeriesCmd, SeriesKind, UsageError,
    VerifyCmd,
};

/// Effective parameters after merging flags over the config file.
struct Resolved {
    lambda: Option<String>,
    d: Option<usize>,
    ell: Option<usize>,
    cap: Option<usize>,
    bound: Option<usize>,
    box_size: Option<usize>,
    max_size: Option<usize>,
    kind: Option<SeriesKind>,
}

impl Resolved {
    fn merge(cli: &Params, file: &FileConfig, kind: Option<SeriesKind>) -> Self {
        Resolved {
            lambda: cli.lambda.clone().or_else(|| file.lambda.clone()),
            d: cli.d.or(file.d),
            ell: cli.ell.or(file.ell),
            cap: cli.cap.or(file.cap),
            bound: cli.bound.or(file.bound),
            box_size: cli.box_size.or(file.box_size),
            max_size: cli.max_size.or(file.max_size),
            kind: kind.or(file.kind),
        }
    }

    fn lambda(&self) -> Result<Partition, UsageError> {
        let text = self
            .lambda
            .as_ref()
            .ok_or_else(|| UsageError("missing required parameter --lambda".into()))?;
        Partition::from_str(text).map_err(|e| UsageError(format!("--lambda: {e}")))
    }

    fn need(&self, name: &str, value: Option<usize>) -> Result<usize, UsageError> {
        value.ok_or_else(|| UsageError(format!("missing required parameter --{name}")))
    }

    fn d(&self) -> Result<usize, UsageError> {
        self.need("d", self.d)
    }
    fn ell(&self) -> Result<usize, UsageError> {
        self.need("ell", self.ell)
    }
    fn cap(&self) -> Result<usize, UsageError> {
        self.need("cap", self.cap)
    }
    fn bound(&self) -> Result<usize, UsageError> {
        self.need("bound", self.bound)
    }
    fn box_size(&self) -> Result<usize, UsageError> {
        self.need("box", self.box_size)
    }
    fn max_size(&self) -> Result<usize, UsageError> {
        self.need("max-size", self.max_size)
    }
}

fn lib_err(err: Error) -> UsageError {
    let mut msg = err.to_string();
    if matches!(err, Error::NotThin { .. }) {
        msg.push_str("; the multiset verifier (`verify bessenrodt`) covers non-thin partitions");
    }
    UsageError(msg)
}

fn load_file_config(cli: &Cli) -> Result<FileConfig, UsageError> {
    let Some(path) = &cli.config else {
        return Ok(FileConfig::default());
    };
    let text = fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| UsageError(format!("bad config file: {e}")))
}

/// Parses the `command` string of a config file into the same command tree
/// as the flags, e.g. `"verify bessenrodt"` or `"series emit rpp-sum"`.
fn command_from_string(text: &str) -> Result<Command, UsageError> {
    let words: Vec<&str> = text.split_whitespace().collect();
    let empty = Params::default();
    let bad = || UsageError(format!("unknown command {text:?} in config file"));
    match words.as_slice() {
        ["corpus"] => Ok(Command::Corpus(empty)),
        ["verify", which] => {
            let v = match *which {
                "bessenrodt" => VerifyCmd::Bessenrodt(empty),
                "tectonic" => VerifyCmd::Tectonic(empty),
                "hookstrip" => VerifyCmd::Hookstrip(empty),
                "gansner" => VerifyCmd::Gansner(empty),
                "skew" => VerifyCmd::Skew(empty),
                "wallcross" => VerifyCmd::Wallcross(empty),
                "refined-rpp" => VerifyCmd::RefinedRpp(empty),
                "hookstrip-series" => VerifyCmd::HookstripSeries(empty),
                "ultimate" => VerifyCmd::Ultimate(empty),
                "fock" => VerifyCmd::Fock(empty),
                _ => return Err(bad()),
            };
            Ok(Command::Verify { which: v })
        }
        ["enumerate", which] => {
            let e = match *which {
                "partitions" => EnumerateCmd::Partitions(empty),
                "rpp" => EnumerateCmd::Rpp(empty),
                "spp" => EnumerateCmd::Spp(empty),
                "hooks" => EnumerateCmd::Hooks(empty),
                _ => return Err(bad()),
            };
            Ok(Command::Enumerate { which: e })
        }
        ["series", "emit"] => Ok(Command::Series {
            which: SeriesCmd::Emit {
                kind: None,
                params: empty,
            },
        }),
        ["series", "emit", kind] => {
            let kind = match *kind {
                "rpp-sum" => SeriesKind::RppSum,
                "rpp-product" => SeriesKind::RppProduct,
                "spp-sum" => SeriesKind::SppSum,
                "spp-product" => SeriesKind::SppProduct,
                _ => return Err(bad()),
            };
            Ok(Command::Series {
                which: SeriesCmd::Emit {
                    kind: Some(kind),
                    params: empty,
                },
            })
        }
        _ => Err(bad()),
    }
}

pub fn run(cli: Cli) -> Result<bool, UsageError> {
    let file = load_file_config(&cli)?;
    let format = cli.format.or(file.format).unwrap_or(Format::Json);
    let output = cli.output.clone().or_else(|| file.output.clone());
    let jobs = cli
        .jobs
        .or(file.jobs)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
        .max(1);

    let command = match cli.command.clone() {
        Some(c) => c,
        None => match &file.command {
            Some(text) => command_from_string(text)?,
            None => return Err(UsageError("no command given".into())),
        },
    };

    match command {
        Command::Verify { which } => {
            let (name, result, pass) = run_verify(&which, &file)?;
            let doc = render_document(name, &result, format);
            write_out(&output, &doc)?;
            Ok(pass)
        }
        Command::Enumerate { which } => {
            let text = run_enumerate(&which, &file)?;
            write_out(&output, &text)?;
            Ok(true)
        }
        Command::Series {
            which: SeriesCmd::Emit { kind, params },
        } => {
            let p = Resolved::merge(&params, &file, kind);
            let text = run_series_emit(&p)?;
            write_out(&output, &text)?;
            Ok(true)
        }
        Command::Corpus(params) => {
            let p = Resolved::merge(&params, &file, None);
            let outcome = crate::corpus::run_corpus(p.max_size()?, jobs);
            let doc = render_document("corpus", &outcome.result, format);
            write_out(&output, &doc)?;
            Ok(outcome.pass)
        }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn run_verify(
    which: &VerifyCmd,
    file: &FileConfig,
) -> Result<(&'static str, serde_json::Value, bool), UsageError> {
    match which {
        VerifyCmd::Bessenrodt(params) => {
            let p = Resolved::merge(params, file, None);
            let r = hooks::verify_bessenrodt(&p.lambda()?, p.bound()?).map_err(lib_err)?;
            Ok(("verify bessenrodt", to_value(&r), r.pass))
        }
        VerifyCmd::Tectonic(params) => {
            let p = Resolved::merge(params, file, None);
            let r =
                tectonic::verify_thin_bijection(&p.lambda()?, p.box_size()?).map_err(lib_err)?;
            Ok(("verify tectonic", to_value(&r), r.pass))
        }
        VerifyCmd::Hookstrip(params) => {
            let p = Resolved::merge(params, file, None);
            let r = hook_strip::verify_hook_strip(p.d()?, p.ell()?);
            Ok(("verify hookstrip", to_value(&r), r.pass))
        }
        VerifyCmd::Gansner(params) => {
            let p = Resolved::merge(params, file, None);
            let r = series::verify_gansner(&p.lambda()?, p.cap()?).map_err(lib_err)?;
            Ok(("verify gansner", to_value(&r), r.pass))
        }
        VerifyCmd::Skew(params) => {
            let p = Resolved::merge(params, file, None);
            let r = series::verify_skew(&p.lambda()?, p.cap()?).map_err(lib_err)?;
            Ok(("verify skew", to_value(&r), r.pass))
        }
        VerifyCmd::Wallcross(params) => {
            let p = Resolved::merge(params, file, None);
            let r = series::verify_wallcrossing(&p.lambda()?, p.cap()?).map_err(lib_err)?;
            Ok(("verify wallcross", to_value(&r), r.pass))
        }
        VerifyCmd::RefinedRpp(params) => {
            let p = Resolved::merge(params, file, None);
            let r = series::verify_refined_rpp(&p.lambda()?, p.cap()?).map_err(lib_err)?;
            Ok(("verify refined-rpp", to_value(&r), r.pass))
        }
        VerifyCmd::HookstripSeries(params) => {
            let p = Resolved::merge(params, file, None);
            let r =
                series::verify_hook_strip_series(p.d()?, p.ell()?, p.cap()?).map_err(lib_err)?;
            Ok(("verify hookstrip-series", to_value(&r), r.pass))
        }
        VerifyCmd::Ultimate(params) => {
            let p = Resolved::merge(params, file, None);
            let r = series::verify_ultimate(p.d()?, p.cap()?).map_err(lib_err)?;
            Ok(("verify ultimate", to_value(&r), r.pass))
        }
        VerifyCmd::Fock(params) => {
            let p = Resolved::merge(params, file, None);
            let r = fock::verify_fock_identity(p.d()?, p.ell()?).map_err(lib_err)?;
            Ok(("verify fock", to_value(&r), r.pass))
        }
    }
}

/// Enumerations print newline-delimited JSON, one record per line, for
/// external diffing.
fn run_enumerate(which: &EnumerateCmd, file: &FileConfig) -> Result<String, UsageError> {
    let mut lines = Vec::new();
    match which {
        EnumerateCmd::Partitions(params) => {
            let p = Resolved::merge(params, file, None);
            for lambda in partitions_of(p.d()?) {
                lines.push(serde_json::to_string(&lambda).unwrap());
            }
        }
        EnumerateCmd::Rpp(params) => {
            let p = Resolved::merge(params, file, None);
            for f in pp::rpp_enumerate(&p.lambda()?, p.max_size()?) {
                lines.push(serde_json::to_string(&f).unwrap());
            }
        }
        EnumerateCmd::Spp(params) => {
            let p = Resolved::merge(params, file, None);
            for f in pp::spp_enumerate(&p.lambda()?, p.max_size()?) {
                lines.push(serde_json::to_string(&f).unwrap());
            }
        }
        EnumerateCmd::Hooks(params) => {
            let p = Resolved::merge(params, file, None);
            let lambda = p.lambda()?;
            // Default window: large enough to cover every internal type.
            let bound = p.bound.unwrap_or(lambda.first_part() + lambda.rows());
            for (cell, stats) in hooks::internal_hooks(&lambda) {
                lines.push(serde_json::to_string(&json!({"cell": cell, "stats": stats})).unwrap());
            }
            for (cell, stats) in hooks::external_hooks_up_to(&lambda, bound) {
                lines.push(serde_json::to_string(&json!({"cell": cell, "stats": stats})).unwrap());
            }
        }
    }
    lines.push(String::new());
    Ok(lines.join("\n"))
}

/// `series emit` output is the bare sorted TSV, with no header, so it is
/// bit-exact across runs.
fn run_series_emit(p: &Resolved) -> Result<String, UsageError> {
    let kind = p
        .kind
        .ok_or_else(|| UsageError("missing series kind (e.g. `series emit rpp-sum`)".into()))?;
    let lambda = p.lambda()?;
    let cap = p.cap()?;
    let series: TruncSeries = match kind {
        SeriesKind::RppSum => {
            let mut s = TruncSeries::zero(cap);
            for f in pp::rpp_enumerate(&lambda, cap) {
                s.add_term(ContentMonomial::from_exponents(f.diagonal_sums()), 1);
            }
            s
        }
        SeriesKind::RppProduct => {
            let mut s = TruncSeries::one(cap);
            for (cell, stats) in hooks::internal_hooks(&lambda) {
                if stats.hook_len > cap {
                    continue;
                }
                let m = hook_monomial(&lambda, cell, HookSide::Internal).map_err(lib_err)?;
                s = s.mul(&geom_expand(&m, cap).map_err(lib_err)?);
            }
            s
        }
        SeriesKind::SppSum => {
            let mut s = TruncSeries::zero(cap);
            for f in pp::spp_enumerate(&lambda, cap) {
                s.add_term(ContentMonomial::from_exponents(f.diagonal_sums()), 1);
            }
            s
        }
        SeriesKind::SppProduct => {
            let mut s = TruncSeries::one(cap);
            for (cell, _) in hooks::external_hooks_up_to(&lambda, cap) {
                let m = hook_monomial(&lambda, cell, HookSide::External).map_err(lib_err)?;
                s = s.mul(&geom_expand(&m, cap).map_err(lib_err)?);
            }
            s
        }
    };
    Ok(series.to_tsv())
}

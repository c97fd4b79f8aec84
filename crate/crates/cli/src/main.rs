use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use frobvec::cone::{extremal_ray_directions, is_fp_finite};
use frobvec::factorization::factorizations;
use frobvec::frobenius::{compute, indispensable_binomials, nabla_components, verify_minimal_ideal_basis, Algorithm};
use frobvec::gluing::{fp_glued_bound, glue, gluing_equality, GluingSpec};
use frobvec::groebner::GroebnerBasis;
use frobvec::io::{parse_semigroup, semigroup_to_value};
use frobvec::oracle::{oracle_factorizations, oracle_fp, Budget};
use frobvec::{Error, OrderSpec, Point, Semigroup};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "frobvec", version, about = "p-Frobenius vectors of affine semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Semigroup JSON file.
    #[arg(long, global = true)]
    input: Option<String>,
    /// Inline generators, e.g. "3,0;4,0;1,1".
    #[arg(long, global = true)]
    generators: Option<String>,
    /// Overrides the order given in the input.
    #[arg(long, global = true)]
    order: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether F_p(S) is finite.
    CheckFinite {
        #[command(flatten)]
        common: Common,
    },
    /// Reduced Gröbner basis of the semigroup ideal.
    Groebner {
        #[command(flatten)]
        common: Common,
        /// Also check whether the basis is a minimal generating set.
        #[arg(long)]
        verify: bool,
    },
    /// All factorizations of an element.
    Factorize {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        element: String,
    },
    /// The p-Frobenius vector.
    Fp {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        p: u64,
        /// general, normalform, staircase, f2 or numerical.
        #[arg(long, default_value = "general")]
        algorithm: String,
        /// Cross-check the result with the brute-force oracle.
        #[arg(long)]
        verify: bool,
        /// Oracle time limit in seconds, used with --verify.
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Indispensable binomials of the semigroup ideal.
    Indispensable {
        #[command(flatten)]
        common: Common,
        /// Also check whether they generate the ideal minimally.
        #[arg(long)]
        verify: bool,
    },
    /// Connected components of the factorization complex of an element.
    Nabla {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        element: String,
    },
    /// Glue S with d and gamma and report the Frobenius bound.
    Glue {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        gamma: String,
        #[arg(long, default_value_t = 1)]
        p: u64,
        /// Compare the bound with the oracle on the glued semigroup.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Brute-force F_p, or factorizations when --element is given.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        p: u64,
        #[arg(long)]
        element: Option<String>,
        #[arg(long)]
        budget: Option<f64>,
    },
}

struct Failure {
    code: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: e.code(), message: e.to_string() }
    }
}

fn fail(code: &'static str, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

struct Loaded {
    s: Semigroup,
    order: OrderSpec,
    minimalized: bool,
}

fn load(common: &Common) -> Result<Loaded, Failure> {
    let (s, mut order, minimalized) = match (&common.input, &common.generators) {
        (Some(_), Some(_)) => return Err(fail("USAGE", "give either --input or --generators, not both")),
        (None, None) => return Err(fail("USAGE", "a semigroup is required (--input or --generators)")),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| fail("IO", format!("{path}: {e}")))?;
            let l = parse_semigroup(&text)?;
            (l.semigroup, l.order, l.minimalized)
        }
        (None, Some(inline)) => {
            let gens = inline
                .split(';')
                .map(|g| parse_point(g).map(Point::new))
                .collect::<Result<Vec<_>, _>>()?;
            let n = gens.len();
            let s = Semigroup::minimalize(gens)?;
            let m = s.num_generators() != n;
            (s, OrderSpec::GRLEX, m)
        }
    };
    if let Some(o) = &common.order {
        order = o.parse()?;
    }
    if minimalized {
        eprintln!("warning: input generators were not minimal; using {}", generator_list(&s));
    }
    Ok(Loaded { s, order, minimalized })
}

fn parse_point(text: &str) -> Result<Vec<u64>, Failure> {
    text.split(',')
        .map(|c| {
            c.trim()
                .parse::<u64>()
                .map_err(|_| fail("VALIDATION", format!("'{text}' is not a list of non-negative integers")))
        })
        .collect()
}

fn parse_element(text: &str, s: &Semigroup) -> Result<Point, Failure> {
    let v = parse_point(text)?;
    if v.len() != s.dim() {
        return Err(Error::LengthMismatch { expected: s.dim(), found: v.len() }.into());
    }
    Ok(Point::new(v))
}

fn generator_list(s: &Semigroup) -> String {
    let g: Vec<String> = s.generators().iter().map(|g| g.to_string()).collect();
    format!("<{}>", g.join(", "))
}

fn budget(secs: Option<f64>) -> Budget {
    secs.map(Budget::with_seconds).unwrap_or_default()
}

struct Output {
    result: Value,
    meta: Value,
    text: String,
}

fn to_value<T: serde::Serialize + ?Sized>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable output")
}

fn run(command: Command) -> Result<(Output, Format), Failure> {
    let common = match &command {
        Command::CheckFinite { common }
        | Command::Groebner { common, .. }
        | Command::Factorize { common, .. }
        | Command::Fp { common, .. }
        | Command::Indispensable { common, .. }
        | Command::Nabla { common, .. }
        | Command::Glue { common, .. }
        | Command::Oracle { common, .. } => common.clone(),
    };
    let Loaded { s, order, minimalized } = load(&common)?;
    let mut out = match command {
        Command::CheckFinite { .. } => {
            let finite = is_fp_finite(&s)?;
            let rays: Vec<Point> = extremal_ray_directions(&s)?.into_iter().map(|r| r.as_point().clone()).collect();
            let text = format!("F_p(S) is {} for every p >= 1", if finite { "finite" } else { "infinite" });
            Output { result: json!(finite), meta: json!({ "rays": rays }), text }
        }
        Command::Groebner { verify, .. } => {
            let g = GroebnerBasis::of_semigroup(&s, order)?;
            let mut meta = json!({ "size": g.len(), "order": order.name() });
            if verify {
                meta["minimal"] = json!(verify_minimal_ideal_basis(&s, g.elements())?);
            }
            let text = g.elements().iter().map(|b| b.to_string()).collect::<Vec<_>>().join("\n");
            Output { result: to_value(&g.elements()), meta, text }
        }
        Command::Factorize { element, .. } => {
            let n = parse_element(&element, &s)?;
            let mut z = factorizations(&s, &n);
            z.sort_desc(order);
            let text = z.factorizations.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("\n");
            Output { result: to_value(&z.factorizations), meta: json!({ "count": z.len() }), text }
        }
        Command::Fp { p, algorithm, verify, budget: secs, .. } => {
            let algorithm: Algorithm = algorithm.parse()?;
            let report = compute(&s, p, order, algorithm)?;
            let mut meta = to_value(&report);
            meta.as_object_mut().expect("report is an object").remove("result");
            if verify {
                let o = oracle_fp(&s, p, order, budget(secs))?;
                meta["oracle"] = to_value(&o.result);
                meta["agrees"] = json!(o.result == report.result);
            }
            let text = format!("F_{p}(S) = {}", report.result);
            Output { result: to_value(&report.result), meta, text }
        }
        Command::Indispensable { verify, .. } => {
            let ind = indispensable_binomials(&s, order)?;
            let mut meta = json!({ "count": ind.len() });
            if verify {
                meta["generates_minimally"] = json!(verify_minimal_ideal_basis(&s, &ind)?);
            }
            let text = ind.iter().map(|b| b.to_string()).collect::<Vec<_>>().join("\n");
            Output { result: to_value(&ind), meta, text }
        }
        Command::Nabla { element, .. } => {
            let n = parse_element(&element, &s)?;
            let comps = nabla_components(&s, &n);
            let mut text = String::new();
            for (i, c) in comps.iter().enumerate() {
                let members: Vec<String> = c.iter().map(|l| l.to_string()).collect();
                let _ = writeln!(text, "component {}: {}", i + 1, members.join(" "));
            }
            Output { result: to_value(&comps), meta: json!({ "components": comps.len() }), text }
        }
        Command::Glue { d, gamma, p, verify, budget: secs, .. } => {
            let spec = GluingSpec::new(d, parse_element(&gamma, &s)?);
            let glued = glue(&s, &spec)?;
            let bound = fp_glued_bound(&s, p, &spec, order)?;
            let mut meta = json!({ "p": p, "bound": bound });
            let mut text = format!("S' = {}\nF_{p}(S') <= {bound}", generator_list(&glued));
            if p >= 1 {
                let verdict = gluing_equality(&s, p, &spec, order)?;
                meta["verdict"] = to_value(&verdict);
                let _ = write!(text, " ({})", to_value(&verdict).as_str().unwrap_or_default());
            }
            if verify {
                meta["oracle"] = to_value(&oracle_fp(&glued, p, order, budget(secs))?.result);
            }
            Output { result: semigroup_to_value(&glued, order), meta, text }
        }
        Command::Oracle { p, element, budget: secs, .. } => match element {
            Some(e) => {
                let n = parse_element(&e, &s)?;
                let mut z = oracle_factorizations(&s, &n)?;
                z.sort_by(|a, b| order.cmp(b, a));
                let text = z.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("\n");
                Output { result: to_value(&z), meta: json!({ "count": z.len() }), text }
            }
            None => {
                let report = oracle_fp(&s, p, order, budget(secs))?;
                let mut meta = to_value(&report);
                meta.as_object_mut().expect("report is an object").remove("result");
                let text = format!("F_{p}(S) = {} (oracle)", report.result);
                Output { result: to_value(&report.result), meta, text }
            }
        },
    };
    if minimalized {
        out.meta["minimalized"] = json!(true);
        out.meta["semigroup"] = semigroup_to_value(&s, order);
    }
    Ok((out, common.format))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            println!("{}", json!({ "error": { "code": "USAGE", "message": e.to_string().trim() } }));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok((out, Format::Json)) => {
            println!("{}", json!({ "result": out.result, "meta": out.meta }));
            ExitCode::SUCCESS
        }
        Ok((out, Format::Text)) => {
            println!("{}", out.text.trim_end());
            ExitCode::SUCCESS
        }
        Err(f) => {
            println!("{}", json!({ "error": { "code": f.code, "message": f.message } }));
            ExitCode::from(1)
        }
    }
}

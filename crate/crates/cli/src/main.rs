use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use weyl_nichols::braid::{build_diagonal_braiding, cartan_matrix, CartanOutcome, YdSpec};
use weyl_nichols::cycles::{are_conjugate_b, build_conjugator, enumerate_classes};
use weyl_nichols::group::centralizer_structural;
use weyl_nichols::oracle::{brute_is_conjugate, verify_suite, SuiteReport, SUITES};
use weyl_nichols::sqcomm::classes_square_commute;
use weyl_nichols::verdict::{
    bn_dn_transfer, classify, decide_reducible, parse_summand, table1, table1_text, Verdict,
};
use weyl_nichols::{conjugate, BinaryCharacter, Error, FlavorKind, GroupElement, GroupFlavor};

/// Nichols algebra finiteness over W(B_n), W(D_n) and S_n.
#[derive(Parser)]
#[command(name = "weyl-nichols", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Group {
    /// B, D or S
    #[arg(long = "type", default_value = "B")]
    kind: FlavorKind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct Module {
    #[arg(long)]
    sigma: String,
    /// Comma-separated bits
    #[arg(long)]
    chi: String,
    #[arg(long, default_value_t = 1)]
    deg_mu: u32,
    /// e.g. "mu1=sgn mu2=chi(1;2)"
    #[arg(long)]
    mu_label: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// List conjugacy classes
    Classes {
        #[command(flatten)]
        group: Group,
    },
    ConjugateTest {
        #[command(flatten)]
        group: Group,
        x: String,
        y: String,
    },
    /// Find g with g x g^-1 = y
    Conjugator {
        #[command(flatten)]
        group: Group,
        x: String,
        y: String,
    },
    Centralizer {
        #[command(flatten)]
        group: Group,
        x: String,
    },
    /// Diagonal braiding of M(O_sigma, rho) for sigma in A
    Braiding {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        module: Module,
    },
    Finiteness {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        module: Module,
    },
    /// Direct sums, one --summand "<elem>|<chi>|<deg_mu>|<mu_label>" each
    FinitenessMulti {
        #[command(flatten)]
        group: Group,
        #[arg(long = "summand", required = true)]
        summands: Vec<String>,
    },
    /// Square-commutativity of two classes
    Sqcomm {
        #[command(flatten)]
        group: Group,
        x: String,
        y: String,
    },
    /// B_n / D_n transfer case of an element of W(D_n)
    Transfer {
        #[command(flatten)]
        group: Group,
        x: String,
    },
    Table1 {
        #[arg(long)]
        json: bool,
    },
    Verify {
        /// Suite name, or "all"
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        threads: Option<usize>,
    },
}

enum Fail {
    Input(Error),
    Domain(Error),
    Mismatch,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        if e.is_parse() {
            Fail::Input(e)
        } else {
            Fail::Domain(e)
        }
    }
}

type Out = Result<(), Fail>;

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    schema: u32,
    #[serde(flatten)]
    body: T,
}

fn emit_json<T: Serialize>(body: T) {
    let v = Envelope { schema: 1, body };
    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
}

impl Group {
    fn flavor(&self) -> Result<GroupFlavor, Fail> {
        GroupFlavor::new(self.kind, self.n).map_err(Fail::Input)
    }

    fn element(&self, s: &str) -> Result<GroupElement, Fail> {
        GroupElement::parse(s, self.flavor()?).map_err(Fail::Input)
    }
}

impl Module {
    fn spec(&self, group: &Group) -> Result<YdSpec, Fail> {
        let sigma = group.element(&self.sigma)?;
        let chi = BinaryCharacter::parse(&self.chi, group.n).map_err(Fail::Input)?;
        Ok(YdSpec::new(sigma, chi)
            .map_err(Fail::Input)?
            .with_mu(self.deg_mu, self.mu_label.clone()))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Fail::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Fail::Mismatch) => ExitCode::from(3),
    }
}

fn run(command: Command) -> Out {
    match command {
        Command::Classes { group } => classes(group),
        Command::ConjugateTest { group, x, y } => conjugate_test(group, &x, &y),
        Command::Conjugator { group, x, y } => conjugator(group, &x, &y),
        Command::Centralizer { group, x } => centralizer(group, &x),
        Command::Braiding { group, module } => braiding(group, &module),
        Command::Finiteness { group, module } => {
            let v = classify(&module.spec(&group)?)?;
            print_verdict(&v, group.json);
            Ok(())
        }
        Command::FinitenessMulti { group, summands } => {
            let flavor = group.flavor()?;
            let specs = summands
                .iter()
                .map(|s| parse_summand(s, flavor).map_err(Fail::Input))
                .collect::<Result<Vec<_>, _>>()?;
            let v = decide_reducible(&specs)?;
            print_verdict(&v, group.json);
            Ok(())
        }
        Command::Sqcomm { group, x, y } => sqcomm(group, &x, &y),
        Command::Transfer { group, x } => {
            let t = bn_dn_transfer(&group.element(&x)?)?;
            if group.json {
                emit_json(serde_json::json!({ "element": x, "transfer": t }));
            } else {
                println!("{t}");
            }
            Ok(())
        }
        Command::Table1 { json } => {
            if json {
                emit_json(serde_json::json!({ "rows": table1() }));
            } else {
                print!("{}", table1_text());
            }
            Ok(())
        }
        Command::Verify { suite, max_n, json, threads } => verify(&suite, max_n, json, threads),
    }
}

fn print_verdict(v: &Verdict, json: bool) {
    if json {
        emit_json(v);
    } else {
        println!("{v}");
    }
}

fn classes(group: Group) -> Out {
    let classes = enumerate_classes(group.flavor()?)?;
    if group.json {
        emit_json(serde_json::json!({
            "flavor": group.flavor()?.to_string(),
            "classes": classes.iter().map(|c| serde_json::json!({
                "label": c.label.to_string(),
                "representative": c.representative.literal(),
                "size": c.size,
            })).collect::<Vec<_>>(),
        }));
        return Ok(());
    }
    let width = classes.iter().map(|c| c.label.to_string().chars().count()).max().unwrap_or(0);
    for c in &classes {
        let label = c.label.to_string();
        let pad = width - label.chars().count();
        println!("{label}{}  {}  {}", " ".repeat(pad), c.representative.literal(), c.size);
    }
    Ok(())
}

fn are_conjugate(x: &GroupElement, y: &GroupElement) -> Result<bool, Error> {
    match x.flavor().kind() {
        FlavorKind::B => are_conjugate_b(x, y),
        _ => brute_is_conjugate(x, y),
    }
}

fn conjugate_test(group: Group, x: &str, y: &str) -> Out {
    let (ex, ey) = (group.element(x)?, group.element(y)?);
    let holds = are_conjugate(&ex, &ey)?;
    if group.json {
        emit_json(serde_json::json!({ "x": x, "y": y, "conjugate": holds }));
    } else {
        println!("{holds}");
    }
    Ok(())
}

fn conjugator(group: Group, x: &str, y: &str) -> Out {
    let (ex, ey) = (group.element(x)?, group.element(y)?);
    let g = match ex.flavor().kind() {
        FlavorKind::B => build_conjugator(&ex, &ey)?,
        _ => ex
            .flavor()
            .elements()?
            .into_iter()
            .find(|g| conjugate(g, &ex).map(|c| c == ey).unwrap_or(false))
            .ok_or_else(|| Error::Domain(format!("{ex} and {ey} are not conjugate")))?,
    };
    if group.json {
        emit_json(serde_json::json!({ "x": x, "y": y, "conjugator": g.literal() }));
    } else {
        println!("{}", g.literal());
    }
    Ok(())
}

fn centralizer(group: Group, x: &str) -> Out {
    let c = centralizer_structural(&group.element(x)?)?;
    let a_gens: Vec<String> = c.a_generators.iter().map(|a| a.to_string()).collect();
    let perms: Vec<String> = c.perm_part.iter().map(|p| p.to_string()).collect();
    if group.json {
        emit_json(serde_json::json!({
            "element": x,
            "order": c.order,
            "a_order": c.a_order,
            "a_generators": a_gens,
            "perm_part": perms,
            "source": c.source,
        }));
    } else {
        println!("order {} ({:?})", c.order, c.source);
        println!("A' order {}: {}", c.a_order, a_gens.join(" "));
        println!("P order {}: {}", perms.len(), perms.join(" "));
    }
    Ok(())
}

fn braiding(group: Group, module: &Module) -> Out {
    let spec = module.spec(&group)?;
    let b = build_diagonal_braiding(&spec)?;
    let cartan = cartan_matrix(&b.expanded());
    let (components, finite): (Vec<String>, bool) = match &cartan {
        CartanOutcome::NotCartan { line } => (vec![format!("q_{line}{line} = 1")], false),
        CartanOutcome::Cartan(g) => {
            let comps = g
                .components()
                .iter()
                .map(|c| match g.component_type(c) {
                    Some(t) => t.to_string(),
                    None => format!("infinite on {} nodes", c.len()),
                })
                .collect();
            (comps, g.is_finite_type())
        }
    };
    if group.json {
        emit_json(serde_json::json!({
            "braiding": b,
            "cartan": cartan,
            "components": components,
            "finite": finite,
        }));
        return Ok(());
    }
    let width = b.basis.iter().map(|l| l.h.to_string().len()).max().unwrap_or(0);
    for (i, line) in b.basis.iter().enumerate() {
        let row: Vec<String> = b.q[i].iter().map(|&x| format!("{x:>2}")).collect();
        let h = line.h.to_string();
        println!("{h:<width$}  {}  {}  | {}", line.degree, line.chi, row.join(" "));
    }
    if b.multiplicity > 1 {
        println!("multiplicity {}", b.multiplicity);
    }
    println!("components: {}", components.join(", "));
    println!("finite: {finite}");
    Ok(())
}

fn sqcomm(group: Group, x: &str, y: &str) -> Out {
    let r = classes_square_commute(&group.element(x)?, &group.element(y)?)?;
    if group.json {
        emit_json(&r);
        return Ok(());
    }
    println!("{}", r.holds);
    if let Some((s, t)) = r.witness {
        println!("witness {s} {t}");
    }
    Ok(())
}

fn verify(suite: &str, max_n: usize, json: bool, threads: Option<usize>) -> Out {
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Fail::Domain(Error::Domain(e.to_string())))?;
    }
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let reports = names
        .iter()
        .map(|s| verify_suite(s, max_n).map_err(Fail::Input))
        .collect::<Result<Vec<SuiteReport>, _>>()?;
    let passed = reports.iter().all(|r| r.passed());
    if json {
        emit_json(serde_json::json!({ "passed": passed, "reports": reports }));
    } else {
        for r in &reports {
            let status = if r.passed() { "ok" } else { "MISMATCH" };
            println!(
                "{:<12} {:>8} cases  {:>4} mismatches  {:>6} ms  {status}",
                r.suite,
                r.cases,
                r.mismatches.len(),
                r.wall_ms
            );
            for m in r.mismatches.iter().take(20) {
                println!("    {m}");
            }
            if r.mismatches.len() > 20 {
                println!("    ... {} more", r.mismatches.len() - 20);
            }
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Fail::Mismatch)
    }
}

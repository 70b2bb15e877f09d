use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use sepgraph::construct::{cayley_graph, quotient_graph, skew_product};
use sepgraph::crossed::CrossedIso;
use sepgraph::expectation::expect;
use sepgraph::graph::{validate, GraphSpec, SeparatedGraph};
use sepgraph::group::{gross_tucker, GraphAction, GroupElement, GroupSpec, Labeling};
use sepgraph::leavitt::{decompose, induced_automorphism, Algebra, Element, ExChoice};
use sepgraph::{sample, selftest};

/// Exact computation with separated graphs and their Leavitt path algebras.
#[derive(Parser, Debug)]
#[command(name = "sepgraph", version)]
struct Cli {
    /// Separated graph JSON file.
    #[arg(long, global = true)]
    graph: Option<PathBuf>,
    /// Edge labeling JSON file, `{"edge": <group element>}`.
    #[arg(long, global = true)]
    label: Option<PathBuf>,
    /// Group as shorthand (`zmod:3`, `z`, `free:a,b`, `product(zmod:2,zmod:2)`), JSON, or a JSON file.
    #[arg(long, global = true)]
    group: Option<String>,
    /// Group action JSON file.
    #[arg(long, global = true)]
    action: Option<PathBuf>,
    /// Edge choice JSON file, `{"v": ["e2", "f1"]}`, one pick per set in order.
    #[arg(long = "ex-choice", global = true)]
    ex_choice: Option<PathBuf>,
    /// RNG seed for sampling commands.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Number of random samples.
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a graph file against the separated graph axioms.
    Validate,
    /// Build the skew product `E ×_c G` of a finite group labeling.
    Skew,
    /// Build the quotient graph of a group action.
    Quotient,
    /// Recover a free action as a skew product of its quotient.
    GrossTucker,
    /// Build the Cayley separated graph of a finite group.
    Cayley {
        /// Comma-separated generators.
        #[arg(long)]
        generators: String,
    },
    /// Normal form of a word or element.
    Reduce { element: String },
    /// Product of two elements.
    Mul { left: String, right: String },
    /// Adjoint of an element.
    Star { element: String },
    /// Conditional expectation onto the vertex span.
    Expect { element: String },
    /// Homogeneous components of an element.
    Grade { element: String },
    /// Apply the automorphism induced by a group element.
    Act {
        element: String,
        /// Group element acting.
        #[arg(long = "element")]
        by: String,
    },
    /// Check the crossed product isomorphism on generators and random samples.
    VerifyCrossedIso {
        /// Maximum length of sampled words.
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Run the acceptance suite.
    Selftest,
}

enum Outcome {
    Ok,
    Failed,
}

fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("JSON values serialize"));
}

fn graph_json(g: &SeparatedGraph) -> Value {
    serde_json::to_value(g.to_spec()).expect("graph specs serialize")
}

impl Cli {
    fn graph(&self) -> Result<SeparatedGraph> {
        let path = self.graph.as_ref().context("--graph is required")?;
        let spec: GraphSpec = serde_json::from_value(read_json(path)?)
            .with_context(|| format!("reading graph {}", path.display()))?;
        Ok(SeparatedGraph::from_spec(&spec)?)
    }

    fn group(&self) -> Result<GroupSpec> {
        let text = self.group.as_deref().context("--group is required")?;
        let path = Path::new(text);
        if path.is_file() {
            return Ok(serde_json::from_value(read_json(path)?)?);
        }
        Ok(text.parse()?)
    }

    fn labeling(&self, g: &SeparatedGraph) -> Result<Labeling> {
        let path = self.label.as_ref().context("--label is required")?;
        Ok(Labeling::from_json(g, self.group()?, &read_json(path)?)?)
    }

    fn action(&self, g: &SeparatedGraph) -> Result<GraphAction> {
        let path = self.action.as_ref().context("--action is required")?;
        Ok(GraphAction::from_json(g, &read_json(path)?)?)
    }

    fn algebra(&self) -> Result<Arc<Algebra>> {
        let g = self.graph()?;
        let ex = match &self.ex_choice {
            Some(path) => ExChoice::from_json(&g, &read_json(path)?)?,
            None => ExChoice::lexicographic(&g),
        };
        Ok(Algebra::new(g, ex)?)
    }

    fn seed(&self) -> Result<u64> {
        self.seed.context("--seed is required for sampling commands")
    }
}

fn parse_element(alg: &Arc<Algebra>, text: &str) -> Result<Element> {
    Element::parse(alg, text).with_context(|| format!("in element `{text}`"))
}

fn parse_group_element(group: &GroupSpec, text: &str) -> Result<GroupElement> {
    group.parse_element(text).with_context(|| format!("in group element `{text}`"))
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Validate => {
            let path = cli.graph.as_ref().context("--graph is required")?;
            let spec: GraphSpec = serde_json::from_value(read_json(path)?)?;
            let report = validate(&spec);
            let violations: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
            print_json(&json!({ "valid": report.is_valid(), "violations": violations }));
            return Ok(if report.is_valid() { Outcome::Ok } else { Outcome::Failed });
        }
        Command::Skew => {
            let g = cli.graph()?;
            let skew = skew_product(&g, &cli.labeling(&g)?)?;
            print_json(&graph_json(skew.graph()));
        }
        Command::Quotient => {
            let g = cli.graph()?;
            let q = quotient_graph(&g, &cli.action(&g)?)?;
            print_json(&graph_json(&q.graph));
        }
        Command::GrossTucker => {
            let g = cli.graph()?;
            let action = cli.action(&g)?;
            let gt = gross_tucker(&g, &action)?;
            let equivariant = gt.is_equivariant(&g, &action)?;
            print_json(&json!({
                "quotient": graph_json(&gt.quotient.graph),
                "group": serde_json::to_value(action.group().spec())?,
                "label": gt.label.to_json(),
                "isomorphism": serde_json::to_value(&gt.iso)?,
                "equivariant": equivariant,
            }));
            if !equivariant {
                return Ok(Outcome::Failed);
            }
        }
        Command::Cayley { generators } => {
            let group = cli.group()?;
            let gens = generators
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| parse_group_element(&group, s))
                .collect::<Result<Vec<_>>>()?;
            print_json(&graph_json(&cayley_graph(&group, &gens)?));
        }
        Command::Reduce { element } => {
            println!("{}", parse_element(&cli.algebra()?, element)?);
        }
        Command::Mul { left, right } => {
            let alg = cli.algebra()?;
            let x = parse_element(&alg, left)?;
            let y = parse_element(&alg, right)?;
            println!("{}", x.try_mul(&y)?);
        }
        Command::Star { element } => {
            println!("{}", parse_element(&cli.algebra()?, element)?.star());
        }
        Command::Expect { element } => {
            println!("{}", expect(&parse_element(&cli.algebra()?, element)?));
        }
        Command::Grade { element } => {
            let alg = cli.algebra()?;
            let label = cli.labeling(alg.graph())?;
            let x = parse_element(&alg, element)?;
            let parts: serde_json::Map<String, Value> = decompose(&x, &label)?
                .into_iter()
                .map(|(g, part)| (g.to_string(), Value::String(part.to_string())))
                .collect();
            print_json(&Value::Object(parts));
        }
        Command::Act { element, by } => {
            let alg = cli.algebra()?;
            let action = cli.action(alg.graph())?;
            let g = parse_group_element(action.group().spec(), by)?;
            println!("{}", induced_automorphism(&action, &g, &parse_element(&alg, element)?)?);
        }
        Command::VerifyCrossedIso { max_len } => {
            let alg = cli.algebra()?;
            let label = cli.labeling(alg.graph())?;
            let seed = cli.seed()?;
            let iso = CrossedIso::new(&alg, &label)?;
            let report = iso.verify(cli.samples, *max_len, &mut sample::rng(seed));
            println!("{report}");
            if !report.passed() {
                return Ok(Outcome::Failed);
            }
        }
        Command::Selftest => {
            let seed = cli.seed.unwrap_or(selftest::DEFAULT_SEED);
            println!("seed {seed}");
            let mut all = true;
            for outcome in selftest::run_all(seed) {
                println!("{}", outcome.line());
                all &= outcome.ok();
            }
            if !all {
                return Ok(Outcome::Failed);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn unknown_groups_are_rejected() {
        let cli = Cli::parse_from(["sepgraph", "--group", "dihedral:4", "cayley", "--generators", "1"]);
        assert!(cli.group().is_err());
    }
}

use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Graph6,
}

/// A command's payload plus the alternative renderings it supports.
pub struct Output {
    pub command: &'static str,
    pub result: Value,
    pub csv: Option<String>,
    pub graph6: Option<String>,
    /// Exit 0 when true, 1 when the computation answered "no".
    pub positive: bool,
}

impl Output {
    pub fn new(command: &'static str, result: impl Serialize, positive: bool) -> Self {
        let result = serde_json::to_value(result).expect("serialisable result");
        Output { command, result, csv: None, graph6: None, positive }
    }

    pub fn csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    pub fn graph6(mut self, g6: String) -> Self {
        self.graph6 = Some(g6);
        self
    }

    pub fn render(&self, format: Format, seed: u64, tol: f64, elapsed: Option<f64>) -> Result<String, String> {
        match format {
            Format::Json => {
                let mut env = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": self.command,
                    "seed": seed,
                    "tol": tol,
                    "result": self.result,
                });
                if let Some(s) = elapsed {
                    env["elapsed"] = json!(s);
                }
                Ok(serde_json::to_string_pretty(&env).expect("valid json") + "\n")
            }
            Format::Csv => Ok(self.csv.clone().unwrap_or_else(|| scalar_csv(&self.result))),
            Format::Graph6 => {
                self.graph6.clone().map(|g| g + "\n").ok_or_else(|| format!("{} has no graph6 output", self.command))
            }
        }
    }
}

/// `key,value` rows for the scalar fields of an object.
fn scalar_csv(v: &Value) -> String {
    let mut out = String::from("key,value\n");
    if let Value::Object(map) = v {
        for (k, v) in map {
            match v {
                Value::Object(_) | Value::Array(_) => {}
                Value::String(s) => out.push_str(&format!("{k},{s}\n")),
                other => out.push_str(&format!("{k},{other}\n")),
            }
        }
    }
    out
}

pub fn schema() -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "envelope": {
            "schema_version": "integer",
            "command": "string, the subcommand",
            "seed": "unsigned 64-bit integer used by every random choice",
            "tol": "real, the tolerance used for numeric results",
            "elapsed": "real seconds, present only with --timing",
            "result": "command-specific object, see below"
        },
        "graphs": "graph6 strings",
        "results": {
            "construct": {"family": "string|null", "n": "integer", "edges": "integer", "graph6": "string"},
            "rho": {"rho": "real", "residual": "real", "iterations": "integer", "tol": "real", "vector": "[real]", "component": "[integer]|null"},
            "free-check": {"free": "bool", "t": "integer", "length": "integer", "witness": "[[integer]]|null"},
            "pack": {"cycles": "[[integer]]", "status": "found|exhausted_none"},
            "grow": {"layers": "[[integer;3]]", "closing_vertex": "integer", "closing_chains": "[integer;2]", "cycle": "[integer]", "warnings": "[string]"},
            "peel": {"core": "graph6|null", "kept": "[integer]", "deleted": "[integer]", "edge_surplus": "integer", "order_condition": "bool"},
            "replace": {"packing": "pack result", "traces": "[grow result]"},
            "lemma53": {"all_hold": "bool", "witnesses": "[[[integer]]|null]"},
            "formula": {"name": "string", "params": "{string: integer}", "value": "{integer}|{rational: {num, den}}|{real}", "range": "proven|valid-per-moon|unproven-range, optional", "equality_attained": "bool, optional"},
            "search": {"n": "integer", "forbidden": "{t, l, parity}", "objective": "edges|rho", "best_value": "real", "best_graphs": "[graph6]", "graphs_scanned": "integer", "evaluations": "integer", "climbs": "[climb], optional", "candidate": "object, optional", "formula": "formula result, optional"},
            "certify": {"is_local_max": "bool", "free": "bool", "rho": "real", "moves_evaluated": "integer", "improving_move": "object, optional"},
            "verify": {"suite": "string", "params": "object", "checks": "[{name, description, expected, actual, pass, skipped}]", "all_pass": "bool"}
        },
        "exit_codes": {"0": "success or positive answer", "1": "negative answer (not free, check failed, nothing found)", "2": "usage error", "3": "internal or numeric failure"}
    })
}

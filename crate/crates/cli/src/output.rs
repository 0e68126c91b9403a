use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputMode {
    #[default]
    Plain,
    Json,
}

impl FromStr for OutputMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plain" => Ok(Self::Plain),
            "json" => Ok(Self::Json),
            other => Err(format!("unknown output mode `{other}`, expected plain|json")),
        }
    }
}

/// A coefficient vector produced by one method. Key order in JSON is fixed
/// by field order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub method: String,
    pub field: String,
    pub order: usize,
    pub coeffs: Vec<String>,
    /// `None` for commands with nothing to re-substitute.
    pub residual_zero: Option<bool>,
}

impl OutputRecord {
    fn plain_lines(&self, out: &mut String) {
        for (n, c) in self.coeffs.iter().enumerate() {
            let _ = writeln!(out, "{n}: {c}");
        }
    }
}

pub fn format_output(r: &OutputRecord, mode: OutputMode) -> String {
    match mode {
        OutputMode::Plain => {
            let mut out = String::new();
            r.plain_lines(&mut out);
            out
        }
        OutputMode::Json => json_line(r),
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut line = serde_json::to_string(value).expect("plain data serializes");
    line.push('\n');
    line
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorRecord {
    #[serde(flatten)]
    pub root: OutputRecord,
    pub cofactor: String,
    pub cofactor_box: [usize; 2],
    pub product_matches: bool,
}

pub fn format_factor(r: &FactorRecord, mode: OutputMode) -> String {
    match mode {
        OutputMode::Plain => {
            let mut out = String::new();
            r.root.plain_lines(&mut out);
            let _ = writeln!(out, "R: {}", r.cofactor);
            out
        }
        OutputMode::Json => json_line(r),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HasseRecord {
    pub method: String,
    pub field: String,
    pub m: usize,
    #[serde(rename = "box")]
    pub result_box: [usize; 2],
    pub poly: String,
}

pub fn format_hasse(r: &HasseRecord, mode: OutputMode) -> String {
    match mode {
        OutputMode::Plain => format!("P^[{}]: {}\n", r.m, r.poly),
        OutputMode::Json => json_line(r),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MethodResult {
    pub method: String,
    pub coeffs: Vec<String>,
    pub residual_zero: bool,
    pub agrees: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyRecord {
    #[serde(flatten)]
    pub reference: OutputRecord,
    pub methods: Vec<MethodResult>,
    pub taylor_residual_zero: bool,
    pub agree: bool,
}

pub fn format_verify(r: &VerifyRecord, mode: OutputMode) -> String {
    match mode {
        OutputMode::Plain => {
            let mut out = String::new();
            for m in &r.methods {
                let _ = writeln!(
                    out,
                    "{}: {} (residual_zero: {}, agrees: {})",
                    m.method,
                    m.coeffs.join(", "),
                    m.residual_zero,
                    m.agrees
                );
            }
            let _ = writeln!(out, "taylor_residual_zero: {}", r.taylor_residual_zero);
            let _ = writeln!(out, "agree: {}", r.agree);
            out
        }
        OutputMode::Json => json_line(r),
    }
}

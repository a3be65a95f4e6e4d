//! The `check` and `demo` commands, minus argument parsing.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::error::Category;

use crate::check::{backend_name, check_structure, DEFAULT_BOUND};
use crate::demo::{generate, DemoName, DemoParams};
use crate::error::CliError;
use crate::report::{digest, ReportFile};
use crate::schema::StructureFile;

pub const BOUND_ENV: &str = "OHL_MAX_APEX";

/// `--bounds` wins over `OHL_MAX_APEX`, which wins over the default.
pub fn resolve_bound(flag: Option<usize>, env: Option<&str>) -> Result<usize, CliError> {
    match (flag, env) {
        (Some(n), _) => Ok(n),
        (None, Some(s)) => {
            s.trim().parse().map_err(|_| CliError::Parse(format!("{BOUND_ENV}={s:?} is not a non-negative integer")))
        }
        (None, None) => Ok(DEFAULT_BOUND),
    }
}

pub fn env_bound(flag: Option<usize>) -> Result<usize, CliError> {
    resolve_bound(flag, std::env::var(BOUND_ENV).ok().as_deref())
}

pub fn parse_structure(bytes: &[u8]) -> Result<StructureFile, CliError> {
    serde_json::from_slice(bytes).map_err(|e| match e.classify() {
        Category::Data => CliError::Schema(e.to_string()),
        _ => CliError::Parse(e.to_string()),
    })
}

pub fn structure_json(f: &StructureFile) -> String {
    let mut s = serde_json::to_string_pretty(f).expect("structures serialize");
    s.push('\n');
    s
}

pub fn check_bytes(bytes: &[u8], bound: usize) -> Result<ReportFile, CliError> {
    let file = parse_structure(bytes)?;
    let r = check_structure(&file, bound)?;
    Ok(ReportFile::new(file.structure.kind(), &backend_name(&file.backend), digest(bytes), &r))
}

fn io(path: &Path, e: std::io::Error) -> CliError {
    CliError::Io { path: path.display().to_string(), msg: e.to_string() }
}

pub fn check_path(path: &Path, bound: usize) -> Result<ReportFile, CliError> {
    let bytes = fs::read(path).map_err(|e| io(path, e))?;
    check_bytes(&bytes, bound)
}

pub fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| io(path, e))
}

/// Paths of the structure and report written by [`run_demo`].
pub struct DemoOutput {
    pub structure: PathBuf,
    pub report_path: PathBuf,
    pub report: ReportFile,
}

pub fn run_demo(name: DemoName, params: &DemoParams, out: &Path, bound: usize) -> Result<DemoOutput, CliError> {
    let (stem, file) = generate(name, params)?;
    let json = structure_json(&file);
    let report = check_bytes(json.as_bytes(), bound)?;
    fs::create_dir_all(out).map_err(|e| io(out, e))?;
    let structure = out.join(format!("{stem}.json"));
    let report_path = out.join(format!("{stem}.report.json"));
    write(&structure, &json)?;
    write(&report_path, &report.to_json())?;
    Ok(DemoOutput { structure, report_path, report })
}

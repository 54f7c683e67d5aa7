//! Shared helpers for the integration tests: workspace paths, a runner for
//! the `dioph` binary, and a small JSON-schema checker covering exactly the
//! keyword subset the shipped schemas use.

#![allow(dead_code)]

use serde_json::Value;
use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

pub fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .canonicalize()
        .expect("workspace root")
}

pub fn data_dir() -> PathBuf {
    workspace_root().join("data")
}

pub fn schema_dir() -> PathBuf {
    workspace_root().join("schema")
}

pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    pub fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| {
            panic!("stdout is not JSON ({e}):\n{}", self.stdout);
        })
    }
}

pub fn run_cli(args: &[&str]) -> CliOutput {
    run_cli_full(args, None, &[])
}

pub fn run_cli_stdin(args: &[&str], stdin: &str) -> CliOutput {
    run_cli_full(args, Some(stdin), &[])
}

pub fn run_cli_env(args: &[&str], envs: &[(&str, &str)]) -> CliOutput {
    run_cli_full(args, None, envs)
}

pub fn run_cli_full(args: &[&str], stdin: Option<&str>, envs: &[(&str, &str)]) -> CliOutput {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_dioph"));
    cmd.args(args)
        .env_remove("DIOPH_DATA_DIR")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (key, value) in envs {
        cmd.env(key, value);
    }
    let mut child = cmd.spawn().expect("spawn dioph");
    if let Some(text) = stdin {
        child
            .stdin
            .as_mut()
            .expect("stdin handle")
            .write_all(text.as_bytes())
            .expect("write stdin");
    }
    drop(child.stdin.take());
    let out = child.wait_with_output().expect("wait for dioph");
    CliOutput {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// All `*.schema.json` documents from the workspace `schema/` directory,
/// keyed by file name so `$ref` can cross files.
pub struct SchemaStore {
    docs: HashMap<String, Value>,
}

impl SchemaStore {
    pub fn load() -> Self {
        let mut docs = HashMap::new();
        for entry in fs::read_dir(schema_dir()).expect("read schema dir") {
            let path = entry.expect("dir entry").path();
            let name = path.file_name().unwrap().to_str().unwrap().to_string();
            if !name.ends_with(".schema.json") {
                continue;
            }
            let text = fs::read_to_string(&path).expect("read schema file");
            let doc: Value =
                serde_json::from_str(&text).unwrap_or_else(|e| panic!("{name}: bad JSON: {e}"));
            docs.insert(name, doc);
        }
        assert!(!docs.is_empty(), "no schema files found");
        SchemaStore { docs }
    }

    pub fn validate(&self, schema_file: &str, instance: &Value) -> Vec<String> {
        let doc = self
            .docs
            .get(schema_file)
            .unwrap_or_else(|| panic!("unknown schema {schema_file}"));
        let mut errors = Vec::new();
        self.check(schema_file, doc, instance, "$", &mut errors);
        errors
    }

    pub fn assert_valid(&self, schema_file: &str, instance: &Value) {
        let errors = self.validate(schema_file, instance);
        assert!(
            errors.is_empty(),
            "instance violates {schema_file}:\n  {}\ninstance: {instance}",
            errors.join("\n  ")
        );
    }

    /// Resolve `$ref`: empty file part means the current document, otherwise
    /// another file from the same directory. Fragments are `/definitions/x`
    /// pointer paths.
    fn resolve<'a>(&'a self, current: &str, reference: &str) -> (String, &'a Value) {
        let (file, fragment) = match reference.split_once('#') {
            Some((f, frag)) => (f, frag),
            None => (reference, ""),
        };
        let file = if file.is_empty() { current } else { file };
        let mut node = self
            .docs
            .get(file)
            .unwrap_or_else(|| panic!("$ref {reference}: unknown file {file}"));
        for segment in fragment.split('/').filter(|s| !s.is_empty()) {
            node = node
                .get(segment)
                .unwrap_or_else(|| panic!("$ref {reference}: missing {segment}"));
        }
        (file.to_string(), node)
    }

    fn check(&self, doc: &str, schema: &Value, instance: &Value, path: &str, errors: &mut Vec<String>) {
        let Some(node) = schema.as_object() else {
            return;
        };
        // Draft-07 semantics: $ref replaces its siblings.
        if let Some(reference) = node.get("$ref").and_then(Value::as_str) {
            let (file, target) = self.resolve(doc, reference);
            self.check(&file, target, instance, path, errors);
            return;
        }
        if let Some(ty) = node.get("type") {
            let allowed: Vec<&str> = match ty {
                Value::String(s) => vec![s.as_str()],
                Value::Array(list) => list.iter().filter_map(Value::as_str).collect(),
                _ => vec![],
            };
            if !allowed.iter().any(|t| type_matches(t, instance)) {
                errors.push(format!(
                    "{path}: expected {allowed:?}, got {}",
                    type_name(instance)
                ));
                return;
            }
        }
        if let Some(options) = node.get("enum").and_then(Value::as_array) {
            if !options.contains(instance) {
                errors.push(format!("{path}: {instance} not in {options:?}"));
                return;
            }
        }
        if let Some(map) = instance.as_object() {
            if let Some(required) = node.get("required").and_then(Value::as_array) {
                for key in required.iter().filter_map(Value::as_str) {
                    if !map.contains_key(key) {
                        errors.push(format!("{path}: missing required key {key:?}"));
                    }
                }
            }
            let properties = node.get("properties").and_then(Value::as_object);
            for (key, value) in map {
                if let Some(sub) = properties.and_then(|p| p.get(key)) {
                    self.check(doc, sub, value, &format!("{path}.{key}"), errors);
                } else {
                    match node.get("additionalProperties") {
                        Some(Value::Bool(false)) => {
                            errors.push(format!("{path}: unexpected key {key:?}"));
                        }
                        Some(Value::Bool(true)) | None => {}
                        Some(sub) => self.check(doc, sub, value, &format!("{path}.{key}"), errors),
                    }
                }
            }
        }
        if let (Some(items), Some(list)) = (node.get("items"), instance.as_array()) {
            for (i, value) in list.iter().enumerate() {
                self.check(doc, items, value, &format!("{path}[{i}]"), errors);
            }
        }
    }
}

fn type_matches(ty: &str, value: &Value) -> bool {
    match ty {
        "object" => value.is_object(),
        "array" => value.is_array(),
        "string" => value.is_string(),
        "boolean" => value.is_boolean(),
        "null" => value.is_null(),
        "number" => value.is_number(),
        "integer" => matches!(value, Value::Number(n) if n.is_i64() || n.is_u64()),
        other => panic!("schema uses unsupported type {other:?}"),
    }
}

fn type_name(value: &Value) -> &'static str {
    match value {
        Value::Null => "null",
        Value::Bool(_) => "boolean",
        Value::Number(_) => "number",
        Value::String(_) => "string",
        Value::Array(_) => "array",
        Value::Object(_) => "object",
    }
}

//! `--config FILE`: a TOML file whose keys are the long flag names.
//!
//! ```toml
//! command = "roots scan"
//! threads = 4
//! family = "monotone"
//! genus = "0..1"
//! n-max = 3
//! ```
//!
//! The file is expanded into ordinary arguments placed before whatever was
//! given on the command line, so explicit flags win.

use std::ffi::OsString;

use anyhow::{bail, Context, Result};

const GLOBAL_KEYS: [&str; 3] = ["threads", "output", "format"];

fn value_args(key: &str, v: &toml::Value) -> Result<Vec<String>> {
    let flag = format!("--{key}");
    Ok(match v {
        toml::Value::Boolean(true) => vec![flag],
        toml::Value::Boolean(false) => vec![],
        toml::Value::Integer(i) => vec![flag, i.to_string()],
        toml::Value::Float(f) => vec![flag, f.to_string()],
        toml::Value::String(s) => vec![flag, s.clone()],
        toml::Value::Array(a) => {
            let items: Vec<String> = a
                .iter()
                .map(|x| match x {
                    toml::Value::Integer(i) => Ok(i.to_string()),
                    toml::Value::String(s) => Ok(s.clone()),
                    _ => bail!("unsupported array item for '{key}'"),
                })
                .collect::<Result<_>>()?;
            vec![flag, items.join(",")]
        }
        _ => bail!("unsupported value for '{key}'"),
    })
}

fn take_config(args: &mut Vec<OsString>) -> Result<Option<String>> {
    let mut i = 1;
    while i < args.len() {
        let a = args[i].to_string_lossy().to_string();
        if a == "--config" {
            if i + 1 >= args.len() {
                bail!("--config needs a path");
            }
            let p = args[i + 1].to_string_lossy().to_string();
            args.drain(i..i + 2);
            return Ok(Some(p));
        }
        if let Some(p) = a.strip_prefix("--config=") {
            let p = p.to_string();
            args.remove(i);
            return Ok(Some(p));
        }
        i += 1;
    }
    Ok(None)
}

/// Rewrite the argument list with the config file spliced in.
pub fn expand(mut args: Vec<OsString>) -> Result<Vec<OsString>> {
    let Some(path) = take_config(&mut args)? else {
        return Ok(args);
    };
    let text = std::fs::read_to_string(&path).with_context(|| format!("reading {path}"))?;
    let table: toml::Table = text.parse().with_context(|| format!("parsing {path}"))?;
    let mut globals = Vec::new();
    let mut flags = Vec::new();
    let mut command = None;
    for (k, v) in &table {
        if k == "command" {
            command = Some(v.as_str().context("'command' must be a string")?.to_string());
        } else if GLOBAL_KEYS.contains(&k.as_str()) {
            globals.extend(value_args(k, v)?);
        } else {
            flags.extend(value_args(k, v)?);
        }
    }
    let rest: Vec<OsString> = args.drain(1..).collect();
    let mut out = vec![args.remove(0)];
    out.extend(globals.into_iter().map(OsString::from));
    match command {
        Some(c) => {
            if rest.first().is_some_and(|a| !a.to_string_lossy().starts_with('-')) {
                bail!("{path} already names the command '{c}'");
            }
            out.extend(c.split_whitespace().map(OsString::from));
            out.extend(flags.into_iter().map(OsString::from));
        }
        None if !flags.is_empty() => bail!("{path} sets subcommand flags but no 'command'"),
        None => {}
    }
    out.extend(rest);
    Ok(out)
}

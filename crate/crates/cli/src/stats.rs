use clap::{Args, ValueEnum};
use qstirling::groups::{stats_a, stats_b, stats_r, Caps};

use crate::{usage, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Group {
    A,
    B,
    Colored,
}

impl Group {
    fn allowed(self) -> &'static [&'static str] {
        match self {
            Group::A => &["des", "maj"],
            Group::B => &["des", "fmaj", "neg"],
            Group::Colored => &["des_r", "fmaj_r"],
        }
    }
}

#[derive(Args)]
pub struct StatsArgs {
    group: Group,
    #[arg(long)]
    n: usize,
    /// Number of colors, for `colored`.
    #[arg(long)]
    r: Option<u32>,
    /// Statistics to print, comma separated (default: all for the group).
    #[arg(long, value_delimiter = ',')]
    stats: Vec<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

struct Record {
    element: String,
    values: Vec<usize>,
}

fn window(perm: &[u32]) -> String {
    perm.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn records(args: &StatsArgs, names: &[&str]) -> anyhow::Result<Vec<Record>> {
    let caps = Caps::default();
    let pick = |all: &[(&str, usize)]| -> Vec<usize> {
        names
            .iter()
            .map(|n| all.iter().find(|(k, _)| k == n).expect("validated").1)
            .collect()
    };
    let cap_err = |e: qstirling::groups::GroupError| usage(e.to_string());
    let out = match args.group {
        Group::A => caps
            .enumerate_sn(args.n)
            .map_err(cap_err)?
            .map(|p| {
                let s = stats_a(&p);
                Record {
                    element: window(&p),
                    values: pick(&[("des", s.des), ("maj", s.maj)]),
                }
            })
            .collect(),
        Group::B => caps
            .enumerate_bn(args.n)
            .map_err(cap_err)?
            .map(|p| {
                let s = stats_b(&p);
                Record {
                    element: p.to_string(),
                    values: pick(&[("des", s.des), ("fmaj", s.fmaj), ("neg", s.neg)]),
                }
            })
            .collect(),
        Group::Colored => {
            let r = args.r.ok_or_else(|| usage("colored needs --r"))?;
            caps.enumerate_colored(r, args.n)
                .map_err(cap_err)?
                .map(|p| {
                    let s = stats_r(&p);
                    Record {
                        element: p.to_string(),
                        values: pick(&[("des_r", s.des), ("fmaj_r", s.fmaj)]),
                    }
                })
                .collect()
        }
    };
    Ok(out)
}

pub fn run(args: &StatsArgs) -> anyhow::Result<String> {
    let allowed = args.group.allowed();
    if args.r.is_some() && args.group != Group::Colored {
        return Err(usage("--r only applies to colored"));
    }
    let names: Vec<&str> = if args.stats.is_empty() {
        allowed.to_vec()
    } else {
        args.stats.iter().map(String::as_str).collect()
    };
    if let Some(bad) = names.iter().find(|s| !allowed.contains(s)) {
        return Err(usage(format!(
            "statistic `{bad}` is not defined for this group (allowed: {})",
            allowed.join(", ")
        )));
    }
    let recs = records(args, &names)?;
    let mut out = String::new();
    match args.format {
        Format::Text => {
            let width = recs.iter().map(|r| r.element.len()).max().unwrap_or(0);
            for r in &recs {
                out.push_str(&format!("{:<width$}", r.element));
                for (name, v) in names.iter().zip(&r.values) {
                    out.push_str(&format!("  {name}={v}"));
                }
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str("element");
            for name in &names {
                out.push(',');
                out.push_str(name);
            }
            out.push('\n');
            for r in &recs {
                out.push_str(&r.element);
                for v in &r.values {
                    out.push_str(&format!(",{v}"));
                }
                out.push('\n');
            }
        }
        Format::Json => {
            let arr: Vec<serde_json::Value> = recs
                .iter()
                .map(|r| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("element".into(), r.element.clone().into());
                    for (name, v) in names.iter().zip(&r.values) {
                        obj.insert(name.to_string(), (*v).into());
                    }
                    obj.into()
                })
                .collect();
            out = serde_json::to_string_pretty(&arr)?;
            out.push('\n');
        }
    }
    Ok(out)
}

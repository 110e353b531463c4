//! CSV and JSON file formats.
//!
//! Floats are written with 17 significant digits (`{:.16e}`), which is
//! enough for any `f64` to read back to the identical bit pattern.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use lpfrontier::{FrontierCurve, PointFlag, Sample};
use serde::Serialize;

use crate::error::{CliError, CliResult};

/// Formats a float with 17 significant digits. Non-finite values are
/// written as `NaN`, `inf` and `-inf`.
pub fn format_f64(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        v.to_string()
    }
}

fn open(path: &Path) -> CliResult<File> {
    File::open(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn create(path: &Path) -> CliResult<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn csv_err(path: &Path, e: csv::Error) -> CliError {
    let line = e.position().map_or(0, |p| p.line());
    match e.into_kind() {
        csv::ErrorKind::Io(source) => CliError::Io {
            path: path.to_path_buf(),
            source,
        },
        other => CliError::Parse {
            path: path.to_path_buf(),
            line,
            message: format!("{other:?}"),
        },
    }
}

fn parse_field(path: &Path, line: u64, name: &str, raw: &str) -> CliResult<f64> {
    let parse_err = || CliError::Parse {
        path: path.to_path_buf(),
        line,
        message: format!("column {name}: `{raw}` is not a finite number"),
    };
    let v: f64 = raw.trim().parse().map_err(|_| parse_err())?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(parse_err())
    }
}

fn read_two_columns(path: &Path, expected: [&str; 2]) -> CliResult<Vec<(u64, csv::StringRecord)>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .trim(csv::Trim::All)
        .from_reader(open(path)?);
    let header = rdr.headers().map_err(|e| csv_err(path, e))?.clone();
    let names: Vec<&str> = header.iter().collect();
    if names.len() < 2 || names[..2] != expected {
        return Err(CliError::Parse {
            path: path.to_path_buf(),
            line: 1,
            message: format!("expected header `{}`", expected.join(",")),
        });
    }
    let mut rows = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| csv_err(path, e))?;
        let line = rec.position().map_or(0, |p| p.line());
        rows.push((line, rec));
    }
    Ok(rows)
}

/// Reads a sample from a CSV file with header `x,y`.
pub fn read_sample_csv(path: &Path) -> CliResult<Sample> {
    let rows = read_two_columns(path, ["x", "y"])?;
    let mut xs = Vec::with_capacity(rows.len());
    let mut ys = Vec::with_capacity(rows.len());
    for (line, rec) in rows {
        let x = parse_field(path, line, "x", &rec[0])?;
        let y = parse_field(path, line, "y", &rec[1])?;
        if y < 0.0 {
            return Err(CliError::NegativeResponse {
                path: path.to_path_buf(),
                line,
            });
        }
        xs.push(x);
        ys.push(y);
    }
    if xs.is_empty() {
        return Err(CliError::Parse {
            path: path.to_path_buf(),
            line: 1,
            message: "no data rows".into(),
        });
    }
    Ok(Sample::new(xs, ys)?)
}

pub fn write_sample_csv(path: &Path, sample: &Sample) -> CliResult<()> {
    let mut w = create(path)?;
    let mut body = String::with_capacity(48 * (sample.len() + 1));
    body.push_str("x,y\n");
    for (x, y) in sample.iter() {
        body.push_str(&format_f64(x));
        body.push(',');
        body.push_str(&format_f64(y));
        body.push('\n');
    }
    w.write_all(body.as_bytes()).map_err(io_err(path))?;
    w.flush().map_err(io_err(path))
}

/// Writes `grid,value,flag` rows.
pub fn write_curve_csv(path: &Path, curve: &FrontierCurve) -> CliResult<()> {
    let mut w = create(path)?;
    let mut body = String::with_capacity(56 * (curve.len() + 1));
    body.push_str("grid,value,flag\n");
    for ((x, v), f) in curve.grid.iter().zip(&curve.values).zip(&curve.flags) {
        body.push_str(&format_f64(*x));
        body.push(',');
        body.push_str(&format_f64(*v));
        body.push(',');
        body.push_str(f.as_str());
        body.push('\n');
    }
    w.write_all(body.as_bytes()).map_err(io_err(path))?;
    w.flush().map_err(io_err(path))
}

/// Reads a file written by [`write_curve_csv`]. `NaN` values are accepted
/// on `empty_window` rows only.
pub fn read_curve_csv(path: &Path) -> CliResult<FrontierCurve> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(open(path)?);
    let header = rdr.headers().map_err(|e| csv_err(path, e))?.clone();
    if header.iter().collect::<Vec<_>>() != ["grid", "value", "flag"] {
        return Err(CliError::Parse {
            path: path.to_path_buf(),
            line: 1,
            message: "expected header `grid,value,flag`".into(),
        });
    }
    let mut curve = FrontierCurve {
        grid: Vec::new(),
        values: Vec::new(),
        flags: Vec::new(),
    };
    for rec in rdr.records() {
        let rec = rec.map_err(|e| csv_err(path, e))?;
        let line = rec.position().map_or(0, |p| p.line());
        let flag: PointFlag = rec[2].parse().map_err(|_| CliError::Parse {
            path: path.to_path_buf(),
            line,
            message: format!("unknown flag `{}`", &rec[2]),
        })?;
        let value = if flag == PointFlag::EmptyWindow {
            rec[1].trim().parse::<f64>().unwrap_or(f64::NAN)
        } else {
            parse_field(path, line, "value", &rec[1])?
        };
        curve.grid.push(parse_field(path, line, "grid", &rec[0])?);
        curve.values.push(value);
        curve.flags.push(flag);
    }
    Ok(curve)
}

/// Pretty-printed JSON followed by a newline.
pub fn write_json<T: Serialize>(path: &Path, doc: &T) -> CliResult<()> {
    let mut w = create(path)?;
    serde_json::to_writer_pretty(&mut w, doc).map_err(|e| CliError::Json {
        path: path.to_path_buf(),
        source: e,
    })?;
    w.write_all(b"\n").map_err(io_err(path))?;
    w.flush().map_err(io_err(path))
}

/// `dir/stem.suffix` next to `path`: `out/report.json` with suffix
/// `best.csv` gives `out/report.best.csv`.
pub fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "output".into());
    path.with_file_name(format!("{stem}.{suffix}"))
}

/// Provenance file written next to a CSV output.
pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut name = path.file_name().unwrap_or_default().to_os_string();
    name.push(".config.json");
    path.with_file_name(name)
}

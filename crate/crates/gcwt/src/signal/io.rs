//! Signal file format: a JSON sidecar describing the lattice plus a raw
//! little-endian payload of interleaved (re, im) float64 pairs, row-major.
//! Small cases can also be imported from CSV rows of `i0[,i1,...],re,im`.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read};
use std::path::Path;

use byteorder::{LittleEndian, ReadBytesExt, WriteBytesExt};
use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::{Lattice, SampledSignal};
use crate::error::{GcwtError, Result};
use crate::scalar::Scalar;

#[derive(Debug, Serialize, Deserialize)]
struct Sidecar {
    shape: Vec<usize>,
    origin: Vec<f64>,
    spacing: Vec<f64>,
    dtype: String,
}

fn payload_path(json_path: &Path) -> std::path::PathBuf {
    json_path.with_extension("bin")
}

/// Write `f` as `<path>.json` sidecar plus `<path>.bin` payload.
pub fn write_signal<T: Scalar>(path: &Path, f: &SampledSignal<T>) -> Result<()> {
    let sidecar = Sidecar {
        shape: f.lattice.shape.clone(),
        origin: f.lattice.origin.iter().map(|v| v.to_f64().unwrap()).collect(),
        spacing: f.lattice.spacing.iter().map(|v| v.to_f64().unwrap()).collect(),
        dtype: "c128".into(),
    };
    let json = serde_json::to_string_pretty(&sidecar)
        .map_err(|e| GcwtError::Config(format!("sidecar encode: {e}")))?;
    std::fs::write(path, json)?;
    let mut w = BufWriter::new(File::create(payload_path(path))?);
    for v in &f.values {
        w.write_f64::<LittleEndian>(v.re.to_f64().unwrap())?;
        w.write_f64::<LittleEndian>(v.im.to_f64().unwrap())?;
    }
    Ok(())
}

/// Read a signal written by [`write_signal`].
pub fn read_signal<T: Scalar>(path: &Path) -> Result<SampledSignal<T>> {
    let json = std::fs::read_to_string(path)?;
    let sidecar: Sidecar =
        serde_json::from_str(&json).map_err(|e| GcwtError::Config(format!("sidecar parse: {e}")))?;
    if sidecar.dtype != "c128" {
        return Err(GcwtError::Config(format!("unsupported dtype {}", sidecar.dtype)));
    }
    let lattice = Lattice::new(
        sidecar.shape,
        sidecar.origin.iter().map(|&v| T::c(v)).collect(),
        sidecar.spacing.iter().map(|&v| T::c(v)).collect(),
    )?;
    let n = lattice.len();
    let mut r = BufReader::new(File::open(payload_path(path))?);
    let mut values = Vec::with_capacity(n);
    for _ in 0..n {
        let re = r.read_f64::<LittleEndian>()?;
        let im = r.read_f64::<LittleEndian>()?;
        values.push(Complex::new(T::c(re), T::c(im)));
    }
    let mut tail = Vec::new();
    r.read_to_end(&mut tail)?;
    if !tail.is_empty() {
        return Err(GcwtError::Config("payload longer than lattice".into()));
    }
    SampledSignal::new(lattice, values)
}

/// Import CSV rows `i0[,i1,...],re,im` onto a caller-provided lattice.
/// Missing rows stay zero; out-of-range indices are an error.
pub fn read_signal_csv<T: Scalar>(path: &Path, lattice: Lattice<T>) -> Result<SampledSignal<T>> {
    let dim = lattice.dim();
    let mut out = SampledSignal::zeros(lattice);
    let reader = BufReader::new(File::open(path)?);
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != dim + 2 {
            return Err(GcwtError::Config(format!(
                "csv line {}: expected {} fields, got {}",
                lineno + 1,
                dim + 2,
                fields.len()
            )));
        }
        // tolerate a header row
        if lineno == 0 && fields[dim].parse::<f64>().is_err() {
            continue;
        }
        let mut idx = Vec::with_capacity(dim);
        for (ax, field) in fields[..dim].iter().enumerate() {
            let i: usize = field
                .parse()
                .map_err(|_| GcwtError::Config(format!("csv line {}: bad index", lineno + 1)))?;
            if i >= out.lattice.shape[ax] {
                return Err(GcwtError::Config(format!(
                    "csv line {}: index {} out of range",
                    lineno + 1,
                    i
                )));
            }
            idx.push(i);
        }
        let re: f64 = fields[dim]
            .parse()
            .map_err(|_| GcwtError::Config(format!("csv line {}: bad re", lineno + 1)))?;
        let im: f64 = fields[dim + 1]
            .parse()
            .map_err(|_| GcwtError::Config(format!("csv line {}: bad im", lineno + 1)))?;
        let flat = out.lattice.flatten(&idx);
        out.values[flat] = Complex::new(T::c(re), T::c(im));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signal::catalog::catalog;

    #[test]
    fn signal_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sig.json");
        let lat = Lattice::symmetric(2, 4.0, 16);
        let f = catalog::<f64>("gaussian", &lat).unwrap();
        write_signal(&path, &f).unwrap();
        let g = read_signal::<f64>(&path).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn csv_import() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sig.csv");
        std::fs::write(&path, "i,re,im\n0,1.0,0.5\n3,-2.0,0.0\n").unwrap();
        let lat = Lattice::symmetric(1, 2.0, 4);
        let f = read_signal_csv::<f64>(&path, lat).unwrap();
        assert_eq!(f.values[0], Complex::new(1.0, 0.5));
        assert_eq!(f.values[3], Complex::new(-2.0, 0.0));
        assert_eq!(f.values[1], Complex::new(0.0, 0.0));
    }
}

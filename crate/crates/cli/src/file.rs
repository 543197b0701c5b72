//! Line-oriented ideal files:
//!
//! ```text
//! # Kuo's curve
//! char 0
//! ext θ^2 + 1        (optional)
//! vars x y
//! ideal:
//! (y^2 - x^3)^2 - x^7
//! ```

use algebroid::decide::{ExtSpec, RingSpec};
use algebroid::groebner::Ideal;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `{0}` declaration")]
    Missing(&'static str),
    #[error("{0}")]
    Build(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub ring: RingSpec,
    pub generators: Vec<String>,
}

fn generator_name(modulus: &str) -> Option<String> {
    let mut names: Vec<String> = Vec::new();
    let mut cur = String::new();
    for c in modulus.chars().chain(std::iter::once(' ')) {
        if c.is_alphanumeric() || c == '_' {
            if !cur.is_empty() || !c.is_ascii_digit() {
                cur.push(c);
            }
        } else if !cur.is_empty() {
            if !names.contains(&cur) {
                names.push(cur.clone());
            }
            cur.clear();
        }
    }
    match names.len() {
        1 => names.pop(),
        _ => None,
    }
}

impl IdealFile {
    pub fn parse(text: &str) -> Result<IdealFile, FileError> {
        let mut char = None;
        let mut ext = None;
        let mut vars = None;
        let mut generators = Vec::new();
        let mut in_ideal = false;
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| FileError::Syntax { line: k + 1, msg };
            if in_ideal {
                let g = line.trim_end_matches(',').trim();
                if !g.is_empty() {
                    generators.push(g.to_string());
                }
                continue;
            }
            let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match head {
                "char" => {
                    let p = rest.parse::<u64>().map_err(|_| err(format!("bad characteristic '{rest}'")))?;
                    char = Some(p);
                }
                "ext" => {
                    let name = generator_name(rest).ok_or_else(|| err("ext needs a polynomial in one generator".into()))?;
                    ext = Some(ExtSpec {
                        name,
                        modulus: rest.to_string(),
                    });
                }
                "vars" => {
                    let v: Vec<String> = rest
                        .split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|s| !s.is_empty())
                        .map(str::to_string)
                        .collect();
                    if v.is_empty() {
                        return Err(err("no variables".into()));
                    }
                    vars = Some(v);
                }
                "ideal:" | "ideal" => in_ideal = true,
                other => return Err(err(format!("unknown declaration '{other}'"))),
            }
        }
        if !in_ideal {
            return Err(FileError::Missing("ideal:"));
        }
        if generators.is_empty() {
            return Err(FileError::Build("the ideal has no generators".into()));
        }
        Ok(IdealFile {
            ring: RingSpec {
                char: char.ok_or(FileError::Missing("char"))?,
                ext,
                vars: vars.ok_or(FileError::Missing("vars"))?,
            },
            generators,
        })
    }

    pub fn ideal(&self) -> Result<Ideal, FileError> {
        let ring = self.ring.build().map_err(|e| FileError::Build(e.to_string()))?;
        let gens: Vec<&str> = self.generators.iter().map(String::as_str).collect();
        Ideal::parse(&ring, &gens).map_err(|e| FileError::Build(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_file() {
        let f = IdealFile::parse("# cusp\nchar 0\nvars x, y\nideal:\ny^2 - x^3\n").unwrap();
        assert_eq!(f.ring.vars, ["x", "y"]);
        assert_eq!(f.generators, ["y^2 - x^3"]);
        assert_eq!(f.ideal().unwrap().ring().nvars(), 2);
    }

    #[test]
    fn reads_an_extension() {
        let f = IdealFile::parse("char 3\next t^2 + 1\nvars x y\nideal:\ny^2 - t*x^3\n").unwrap();
        assert_eq!(f.ring.ext.as_ref().unwrap().name, "t");
        assert_eq!(f.ideal().unwrap().ring().field().degree(), 2);
    }

    #[test]
    fn rejects_garbage() {
        assert!(IdealFile::parse("char zero\nvars x\nideal:\nx\n").is_err());
        assert!(IdealFile::parse("char 0\nvars x\n").is_err());
        assert!(IdealFile::parse("char 0\nideal:\nx\n").is_err());
        let f = IdealFile::parse("char 0\nvars x\nideal:\nx +* y\n").unwrap();
        assert!(f.ideal().is_err());
    }
}

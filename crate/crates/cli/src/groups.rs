//! Group ingestion: builtin constructors and the generator-file format.
//!
//! Builtins: `sym:n`, `alt:n`, `cyc:n`, `dih:n` (order 2n), `psl2:p` and
//! `psl3:p` for primes p. Anything else is treated as a path to a file of
//! the form
//!
//! ```text
//! degree 5
//! (1,2,3,4,5)
//! (2,3,5,4)
//! ```
//!
//! one generator per line in disjoint-cycle notation, fixed points omitted,
//! whitespace ignored. Blank lines and lines starting with `#` are skipped.

use std::fmt;
use std::path::Path;

use chiral_core::{PermGroup, Permutation};

use crate::error::{CliError, Result};

/// A resolvable description of a permutation group.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub name: String,
    source: Source,
}

#[derive(Clone, Debug)]
enum Source {
    Builtin(Builtin),
    File(String),
}

#[derive(Clone, Debug)]
enum Builtin {
    Sym(usize),
    Alt(usize),
    Cyc(usize),
    Dih(usize),
    Psl2(u64),
    Psl3(u64),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.name.fmt(f)
    }
}

impl GroupSpec {
    /// Interprets `text` as a builtin name or, failing that, a file path.
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let name = text.to_string();
        if let Some((kind, arg)) = text.split_once(':') {
            let n: u64 = arg.parse().map_err(|_| {
                CliError::Parse(format!("bad parameter {:?} in group spec {:?}", arg, text))
            })?;
            let builtin = match kind {
                "sym" => Builtin::Sym(small(n, 2, "sym")?),
                "alt" => Builtin::Alt(small(n, 3, "alt")?),
                "cyc" => Builtin::Cyc(small(n, 1, "cyc")?),
                "dih" => Builtin::Dih(small(n, 3, "dih")?),
                "psl2" => Builtin::Psl2(prime(n, "psl2")?),
                "psl3" => Builtin::Psl3(prime(n, "psl3")?),
                other => {
                    return Err(CliError::Parse(format!(
                        "unknown builtin family {:?} (expected sym, alt, cyc, dih, psl2, psl3)",
                        other
                    )))
                }
            };
            return Ok(GroupSpec {
                name,
                source: Source::Builtin(builtin),
            });
        }
        Ok(GroupSpec {
            name,
            source: Source::File(text.to_string()),
        })
    }

    /// Builds the permutation group this spec describes.
    pub fn resolve(&self) -> Result<PermGroup> {
        match &self.source {
            Source::Builtin(b) => build_builtin(b),
            Source::File(path) => {
                let text = std::fs::read_to_string(Path::new(path)).map_err(|e| {
                    CliError::Parse(format!("cannot read group file {:?}: {}", path, e))
                })?;
                parse_group_file(&text)
            }
        }
    }
}

fn small(n: u64, min: u64, family: &str) -> Result<usize> {
    if n < min || n > 100_000 {
        return Err(CliError::Parse(format!(
            "{}:{} out of range (need {} <= n <= 100000)",
            family, n, min
        )));
    }
    Ok(n as usize)
}

fn prime(p: u64, family: &str) -> Result<u64> {
    if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
        return Err(CliError::Parse(format!(
            "{}:{} needs a prime parameter",
            family, p
        )));
    }
    Ok(p)
}

fn perm(degree: usize, cycles: &[Vec<usize>]) -> Result<Permutation> {
    Permutation::from_cycles(degree, cycles).map_err(|e| CliError::Internal(e.to_string()))
}

fn build_builtin(b: &Builtin) -> Result<PermGroup> {
    let (degree, gens) = match b {
        Builtin::Sym(n) => {
            let n = *n;
            (n, vec![perm(n, &[vec![1, 2]])?, perm(n, &[(1..=n).collect()])?])
        }
        Builtin::Alt(n) => {
            let n = *n;
            let long: Vec<usize> = if n % 2 == 1 {
                (1..=n).collect()
            } else {
                (2..=n).collect()
            };
            (n, vec![perm(n, &[vec![1, 2, 3]])?, perm(n, &[long])?])
        }
        Builtin::Cyc(n) => {
            let n = *n;
            (n, vec![perm(n, &[(1..=n).collect()])?])
        }
        Builtin::Dih(n) => {
            let n = *n;
            let rot = perm(n, &[(1..=n).collect()])?;
            let images: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
            let refl =
                Permutation::from_images(images).map_err(|e| CliError::Internal(e.to_string()))?;
            (n, vec![rot, refl])
        }
        Builtin::Psl2(p) => return psl2(*p),
        Builtin::Psl3(p) => return psl3(*p),
    };
    PermGroup::from_generators(degree, gens).map_err(|e| CliError::Internal(e.to_string()))
}

/// PSL(2,p) in its natural action on the projective line: points
/// `0..p` are the field elements and point `p` is infinity. Generated by
/// `z -> z + 1` and `z -> -1/z`.
fn psl2(p: u64) -> Result<PermGroup> {
    let p = p as i64;
    let degree = (p + 1) as usize;
    let inf = p;
    let modp = |x: i64| x.rem_euclid(p);
    let translate: Vec<u32> = (0..=p)
        .map(|z| if z == inf { inf } else { modp(z + 1) } as u32)
        .collect();
    let invert: Vec<u32> = (0..=p)
        .map(|z| {
            if z == inf {
                0u32
            } else if z == 0 {
                inf as u32
            } else {
                modp(-mod_inverse(z, p)) as u32
            }
        })
        .collect();
    let gens = vec![
        Permutation::from_images(translate).map_err(|e| CliError::Internal(e.to_string()))?,
        Permutation::from_images(invert).map_err(|e| CliError::Internal(e.to_string()))?,
    ];
    PermGroup::from_generators(degree, gens).map_err(|e| CliError::Internal(e.to_string()))
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a.rem_euclid(p);
    let mut exp = p - 2;
    let mut acc = 1i64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// PSL(3,p) acting on the p^2 + p + 1 points of the projective plane.
///
/// SL(3,p) is generated by the transvection E_12(1) and the cyclic
/// coordinate shift (determinant +1); the center acts trivially on
/// projective points, so the permutation image is PSL(3,p).
fn psl3(p: u64) -> Result<PermGroup> {
    let p = p as i64;
    // Projective points as normalized column vectors: first nonzero
    // coordinate equals 1.
    let mut points: Vec<[i64; 3]> = Vec::new();
    for x in 0..p {
        for y in 0..p {
            points.push([1, x, y]);
        }
    }
    for x in 0..p {
        points.push([0, 1, x]);
    }
    points.push([0, 0, 1]);
    let index_of = |v: [i64; 3]| -> usize {
        points.iter().position(|w| *w == v).expect("projective point")
    };
    let normalize = |v: [i64; 3]| -> [i64; 3] {
        let lead = v.iter().copied().find(|&c| c != 0).expect("nonzero vector");
        let inv = mod_inverse(lead, p);
        [
            v[0] * inv % p,
            v[1] * inv % p,
            v[2] * inv % p,
        ]
    };
    let act = |m: &[[i64; 3]; 3]| -> Vec<u32> {
        points
            .iter()
            .map(|v| {
                let mut w = [0i64; 3];
                for r in 0..3 {
                    w[r] = (0..3).map(|c| m[r][c] * v[c]).sum::<i64>() % p;
                }
                index_of(normalize(w)) as u32
            })
            .collect()
    };
    let transvection = [[1, 1, 0], [0, 1, 0], [0, 0, 1]];
    let shift = [[0, 0, 1], [1, 0, 0], [0, 1, 0]];
    let gens = vec![
        Permutation::from_images(act(&transvection))
            .map_err(|e| CliError::Internal(e.to_string()))?,
        Permutation::from_images(act(&shift)).map_err(|e| CliError::Internal(e.to_string()))?,
    ];
    PermGroup::from_generators(points.len(), gens)
        .map_err(|e| CliError::Internal(e.to_string()))
}

/// Parses the `degree d` + cycle-notation file format.
pub fn parse_group_file(text: &str) -> Result<PermGroup> {
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Permutation> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if degree.is_none() {
            let rest = raw.trim().strip_prefix("degree").ok_or_else(|| {
                CliError::Parse(format!("line {}: expected header `degree d`", lineno))
            })?;
            let d: usize = rest.trim().parse().map_err(|_| {
                CliError::Parse(format!("line {}: bad degree {:?}", lineno, rest.trim()))
            })?;
            if d == 0 {
                return Err(CliError::Parse(format!("line {}: degree must be positive", lineno)));
            }
            degree = Some(d);
            continue;
        }
        let d = degree.unwrap();
        let cycles = parse_cycles(&line, d, lineno)?;
        let g = Permutation::from_cycles(d, &cycles)
            .map_err(|e| CliError::Parse(format!("line {}: {}", lineno, e)))?;
        gens.push(g);
    }
    let degree = degree
        .ok_or_else(|| CliError::Parse("missing `degree d` header line".into()))?;
    PermGroup::from_generators(degree, gens).map_err(|e| CliError::Internal(e.to_string()))
}

fn parse_cycles(line: &str, degree: usize, lineno: usize) -> Result<Vec<Vec<usize>>> {
    let err = |msg: String| CliError::Parse(format!("line {}: {}", lineno, msg));
    if line == "()" {
        return Ok(Vec::new());
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; degree + 1];
    let mut chars = line.chars().peekable();
    while let Some(c) = chars.next() {
        if c != '(' {
            return Err(err(format!("expected '(' but found {:?}", c)));
        }
        let mut cycle: Vec<usize> = Vec::new();
        let mut number = String::new();
        loop {
            match chars.next() {
                Some(d) if d.is_ascii_digit() => number.push(d),
                Some(sep @ (',' | ')')) => {
                    if number.is_empty() {
                        return Err(err("empty entry in cycle".into()));
                    }
                    let point: usize = number
                        .parse()
                        .map_err(|_| err(format!("bad point {:?}", number)))?;
                    number.clear();
                    if point == 0 || point > degree {
                        return Err(err(format!(
                            "point {} out of range 1..={}",
                            point, degree
                        )));
                    }
                    if seen[point] {
                        return Err(err(format!("repeated point {}", point)));
                    }
                    seen[point] = true;
                    cycle.push(point);
                    if sep == ')' {
                        break;
                    }
                }
                Some(other) => return Err(err(format!("unexpected character {:?}", other))),
                None => return Err(err("unbalanced parentheses".into())),
            }
        }
        if cycle.len() < 2 {
            return Err(err("cycles need at least two points".into()));
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// Renders a group in the same file format `parse_group_file` reads.
pub fn serialize_group(group: &PermGroup) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

//! Flat `key = value` experiment configuration.
//!
//! One assignment per line, `#` starts a comment. Every problem in a file is
//! collected before reporting. Angles accept `pi` expressions (`pi/8`,
//! `3*pi/8`, `-pi/4`) and a `deg` suffix; list-valued keys take comma
//! separated items where `start:stop:count` expands to an evenly spaced grid
//! (integer lists use `first:last`, inclusive).

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use cheshire_core::experiments::{MuPolicy, PerturbationParams};
use cheshire_core::pointer::{GaussianPointer, Grid};
use cheshire_core::{Error as CoreError, Polarisation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Evolve,
    WeakValue,
    Homodyne,
    PerturbScan,
    MonteCarlo,
    Pointer,
    ProjectorProfile,
}

impl Kind {
    pub const ALL: [Kind; 7] = [
        Kind::Evolve,
        Kind::WeakValue,
        Kind::Homodyne,
        Kind::PerturbScan,
        Kind::MonteCarlo,
        Kind::Pointer,
        Kind::ProjectorProfile,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Evolve => "evolve",
            Kind::WeakValue => "weak-value",
            Kind::Homodyne => "homodyne",
            Kind::PerturbScan => "perturb-scan",
            Kind::MonteCarlo => "montecarlo",
            Kind::Pointer => "pointer",
            Kind::ProjectorProfile => "projector-profile",
        }
    }

    /// Keys this kind reads, besides the common ones.
    fn keys(self) -> &'static [&'static str] {
        match self {
            Kind::Evolve => &["N", "mirror_present", "input", "steps"],
            Kind::WeakValue => &["N", "mirror_present", "beta"],
            Kind::Homodyne => &["N"],
            Kind::PerturbScan => &["N", "delta", "mu", "mu_policy", "shots"],
            Kind::MonteCarlo => &["N", "mirror_present", "delta", "mu", "shots"],
            Kind::Pointer => &[
                "N",
                "mirror_present",
                "alpha",
                "beta",
                "a",
                "w0",
                "grid_half_width",
                "grid_samples",
                "h_polariser",
            ],
            Kind::ProjectorProfile => &["N", "a", "w0", "n", "y"],
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Kind::ALL.iter().map(|k| k.name()).collect();
                format!("unknown kind `{s}` (expected one of {})", names.join(", "))
            })
    }
}

const COMMON_KEYS: [&str; 4] = ["kind", "seed", "format", "out"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("expected `csv` or `json`, got `{s}`")),
        }
    }
}

/// Named input polarisations for `evolve`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputState {
    H,
    V,
    D,
    A,
}

impl InputState {
    pub fn polarisation(self) -> Polarisation {
        match self {
            InputState::H => Polarisation::horizontal(),
            InputState::V => Polarisation::vertical(),
            InputState::D => Polarisation::diagonal(),
            InputState::A => Polarisation::antidiagonal(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            InputState::H => "H",
            InputState::V => "V",
            InputState::D => "D",
            InputState::A => "A",
        }
    }
}

impl FromStr for InputState {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "H" => Ok(InputState::H),
            "V" => Ok(InputState::V),
            "D" => Ok(InputState::D),
            "A" => Ok(InputState::A),
            _ => Err(format!("expected one of H, V, D, A, got `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Experiment {
    Evolve {
        half_cycles: u32,
        mirror_present: bool,
        input: InputState,
        steps: usize,
    },
    WeakValue {
        half_cycles: u32,
        mirror_present: bool,
        betas: Vec<f64>,
    },
    /// Both mirror settings are always reported.
    Homodyne { half_cycles: Vec<u32> },
    PerturbScan {
        half_cycles: u32,
        deltas: Vec<f64>,
        policy: MuPolicy,
        shots: u64,
    },
    MonteCarlo {
        params: PerturbationParams,
        shots: u64,
    },
    Pointer {
        pointer: GaussianPointer,
        half_cycles: u32,
        mirror_present: bool,
        h_polariser: bool,
    },
    ProjectorProfile {
        pointer: GaussianPointer,
        half_cycles: u32,
        steps: Vec<usize>,
        ys: Vec<f64>,
    },
}

impl Experiment {
    pub fn kind(&self) -> Kind {
        match self {
            Experiment::Evolve { .. } => Kind::Evolve,
            Experiment::WeakValue { .. } => Kind::WeakValue,
            Experiment::Homodyne { .. } => Kind::Homodyne,
            Experiment::PerturbScan { .. } => Kind::PerturbScan,
            Experiment::MonteCarlo { .. } => Kind::MonteCarlo,
            Experiment::Pointer { .. } => Kind::Pointer,
            Experiment::ProjectorProfile { .. } => Kind::ProjectorProfile,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub experiment: Experiment,
    pub seed: u64,
    pub format: Format,
    /// Output file; standard output when unset.
    pub out: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn kind(&self) -> Kind {
        self.experiment.kind()
    }

    /// Canonical `(key, value)` pairs, every default resolved. Parsing the
    /// rendered pairs gives back an identical configuration. `out` is left out.
    pub fn entries(&self) -> Vec<(&'static str, String)> {
        let mut e = vec![
            ("kind", self.kind().name().to_string()),
            ("seed", self.seed.to_string()),
            ("format", self.format.name().to_string()),
        ];
        match &self.experiment {
            Experiment::Evolve {
                half_cycles,
                mirror_present,
                input,
                steps,
            } => {
                e.push(("N", half_cycles.to_string()));
                e.push(("mirror_present", mirror_present.to_string()));
                e.push(("input", input.name().to_string()));
                e.push(("steps", steps.to_string()));
            }
            Experiment::WeakValue {
                half_cycles,
                mirror_present,
                betas,
            } => {
                e.push(("N", half_cycles.to_string()));
                e.push(("mirror_present", mirror_present.to_string()));
                e.push(("beta", real_list(betas)));
            }
            Experiment::Homodyne { half_cycles } => {
                e.push(("N", join(half_cycles.iter().map(u32::to_string))));
            }
            Experiment::PerturbScan {
                half_cycles,
                deltas,
                policy,
                shots,
            } => {
                e.push(("N", half_cycles.to_string()));
                e.push(("delta", real_list(deltas)));
                e.push(("mu_policy", policy.name().to_string()));
                if let MuPolicy::Fixed(mu) = policy {
                    e.push(("mu", real(*mu)));
                }
                e.push(("shots", shots.to_string()));
            }
            Experiment::MonteCarlo { params, shots } => {
                e.push(("N", params.half_cycles.to_string()));
                e.push(("mirror_present", params.mirror_present.to_string()));
                e.push(("delta", real(params.delta)));
                e.push(("mu", real(params.mu)));
                e.push(("shots", shots.to_string()));
            }
            Experiment::Pointer {
                pointer,
                half_cycles,
                mirror_present,
                h_polariser,
            } => {
                e.push(("N", half_cycles.to_string()));
                e.push(("mirror_present", mirror_present.to_string()));
                e.push(("alpha", real(pointer.alpha)));
                e.push(("beta", real(pointer.beta)));
                e.push(("a", real(pointer.a)));
                e.push(("w0", real(pointer.w0)));
                let grid = pointer.grid();
                e.push(("grid_half_width", real(grid.half_width)));
                e.push(("grid_samples", grid.samples.to_string()));
                e.push(("h_polariser", h_polariser.to_string()));
            }
            Experiment::ProjectorProfile {
                pointer,
                half_cycles,
                steps,
                ys,
            } => {
                e.push(("N", half_cycles.to_string()));
                e.push(("a", real(pointer.a)));
                e.push(("w0", real(pointer.w0)));
                e.push(("n", join(steps.iter().map(usize::to_string))));
                e.push(("y", real_list(ys)));
            }
        }
        e
    }

    /// The canonical entries as config text.
    pub fn to_text(&self) -> String {
        self.entries()
            .into_iter()
            .map(|(k, v)| format!("{k} = {v}\n"))
            .collect()
    }
}

/// Shortest representation that parses back to the same float.
fn real(x: f64) -> String {
    format!("{x:?}")
}

fn real_list(xs: &[f64]) -> String {
    join(xs.iter().map(|&x| real(x)))
}

fn join(items: impl Iterator<Item = String>) -> String {
    items.collect::<Vec<_>>().join(", ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    /// 1-based line in the config text; `None` for command-line values and
    /// missing keys.
    pub line: Option<usize>,
    pub key: Option<String>,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(line) = self.line {
            write!(f, "line {line}: ")?;
        }
        if let Some(key) = &self.key {
            write!(f, "`{key}`: ")?;
        }
        f.write_str(&self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigErrors(pub Vec<ConfigError>);

impl fmt::Display for ConfigErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ConfigErrors {}

/// Values supplied outside the config text; they replace file entries.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub kind: Option<Kind>,
    pub entries: Vec<(String, String)>,
}

impl Overrides {
    pub fn set(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.entries.push((key.into(), value.into()));
    }
}

pub fn parse_config(text: &str) -> Result<ExperimentConfig, ConfigErrors> {
    parse_config_with(text, &Overrides::default())
}

#[derive(Debug, Clone)]
struct Entry {
    line: Option<usize>,
    value: String,
}

pub fn parse_config_with(
    text: &str,
    overrides: &Overrides,
) -> Result<ExperimentConfig, ConfigErrors> {
    let mut errors = Vec::new();
    let mut entries: BTreeMap<String, Entry> = BTreeMap::new();

    for (i, raw) in text.lines().enumerate() {
        let line = Some(i + 1);
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            errors.push(ConfigError {
                line,
                key: None,
                message: format!("expected `key = value`, got `{content}`"),
            });
            continue;
        };
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() || value.is_empty() {
            errors.push(ConfigError {
                line,
                key: (!key.is_empty()).then(|| key.to_string()),
                message: "empty key or value".into(),
            });
            continue;
        }
        if let Some(prev) = entries.get(key) {
            errors.push(ConfigError {
                line,
                key: Some(key.to_string()),
                message: format!(
                    "duplicate key (first set on line {})",
                    prev.line.unwrap_or(0)
                ),
            });
            continue;
        }
        entries.insert(
            key.to_string(),
            Entry {
                line,
                value: value.to_string(),
            },
        );
    }
    for (key, value) in &overrides.entries {
        entries.insert(
            key.clone(),
            Entry {
                line: None,
                value: value.trim().to_string(),
            },
        );
    }

    let known =
        |k: &str| COMMON_KEYS.contains(&k) || Kind::ALL.iter().any(|kind| kind.keys().contains(&k));
    for (key, entry) in &entries {
        if !known(key) {
            errors.push(ConfigError {
                line: entry.line,
                key: Some(key.clone()),
                message: "unknown key".into(),
            });
        }
    }

    let file_kind = entries
        .get("kind")
        .map(|e| (e.line, e.value.parse::<Kind>()));
    let kind = match (overrides.kind, file_kind) {
        (Some(k), Some((line, Ok(f)))) if k != f => {
            errors.push(ConfigError {
                line,
                key: Some("kind".into()),
                message: format!("config says `{f}` but the subcommand is `{k}`"),
            });
            None
        }
        (Some(k), _) => Some(k),
        (None, Some((_, Ok(f)))) => Some(f),
        (None, Some((line, Err(message)))) => {
            errors.push(ConfigError {
                line,
                key: Some("kind".into()),
                message,
            });
            None
        }
        (None, None) => {
            errors.push(ConfigError {
                line: None,
                key: Some("kind".into()),
                message: "required (or name the experiment as a subcommand)".into(),
            });
            None
        }
    };
    let Some(kind) = kind else {
        return Err(ConfigErrors(errors));
    };

    for (key, entry) in &entries {
        if known(key)
            && !COMMON_KEYS.contains(&key.as_str())
            && !kind.keys().contains(&key.as_str())
        {
            errors.push(ConfigError {
                line: entry.line,
                key: Some(key.clone()),
                message: format!("not used by kind `{kind}`"),
            });
        }
    }

    let mut r = Reader {
        entries: &entries,
        errors: &mut errors,
        kind,
    };
    let seed = r.get("seed", 0, parse_count);
    let format = r.get("format", Format::Csv, |s| s.parse());
    let out = entries.get("out").map(|e| PathBuf::from(&e.value));
    let experiment = build(&mut r);

    if errors.is_empty() {
        Ok(ExperimentConfig {
            experiment: experiment.expect("no errors implies a built experiment"),
            seed,
            format,
            out,
        })
    } else {
        Err(ConfigErrors(errors))
    }
}

struct Reader<'a> {
    entries: &'a BTreeMap<String, Entry>,
    errors: &'a mut Vec<ConfigError>,
    kind: Kind,
}

impl Reader<'_> {
    fn error(&mut self, key: &str, message: impl Into<String>) {
        let line = self.entries.get(key).and_then(|e| e.line);
        self.errors.push(ConfigError {
            line,
            key: Some(key.to_string()),
            message: message.into(),
        });
    }

    fn lookup<T>(
        &mut self,
        key: &str,
        parse: impl Fn(&str) -> Result<T, String>,
    ) -> Option<Option<T>> {
        let entry = self.entries.get(key)?;
        match parse(&entry.value) {
            Ok(v) => Some(Some(v)),
            Err(message) => {
                self.error(key, message);
                Some(None)
            }
        }
    }

    /// Parsed value, or `default` when absent. `None` after a parse error.
    fn get_opt<T>(
        &mut self,
        key: &str,
        default: T,
        parse: impl Fn(&str) -> Result<T, String>,
    ) -> Option<T> {
        match self.lookup(key, parse) {
            None => Some(default),
            Some(v) => v,
        }
    }

    fn get<T: Clone>(
        &mut self,
        key: &str,
        default: T,
        parse: impl Fn(&str) -> Result<T, String>,
    ) -> T {
        self.get_opt(key, default.clone(), parse).unwrap_or(default)
    }

    fn required<T>(&mut self, key: &str, parse: impl Fn(&str) -> Result<T, String>) -> Option<T> {
        match self.lookup(key, parse) {
            Some(v) => v,
            None => {
                let kind = self.kind;
                self.error(key, format!("required for kind `{kind}`"));
                None
            }
        }
    }

    fn present(&self, key: &str) -> bool {
        self.entries.contains_key(key)
    }

    /// Maps a module precondition failure onto the config key it came from.
    fn core(&mut self, err: CoreError) {
        match err {
            CoreError::InvalidParameter { name, reason } => self.error(name, reason),
            CoreError::GridTooSmall {
                half_width,
                required,
            } => self.error(
                "grid_half_width",
                format!("{half_width} does not cover the required {required}"),
            ),
            other => self.errors.push(ConfigError {
                line: None,
                key: None,
                message: other.to_string(),
            }),
        }
    }
}

fn build(r: &mut Reader<'_>) -> Option<Experiment> {
    let half_cycles = if r.kind == Kind::Homodyne {
        None
    } else {
        r.get_opt("N", 10, parse_half_cycles)
    };
    match r.kind {
        Kind::Evolve => {
            let mirror_present = r.get_opt("mirror_present", true, parse_bool);
            let input = r.get_opt("input", InputState::H, |s| s.parse());
            let n = half_cycles.unwrap_or(10);
            let steps = r.get_opt("steps", 2 * n as usize, |s| {
                parse_count(s).map(|v| v as usize)
            });
            Some(Experiment::Evolve {
                half_cycles: half_cycles?,
                mirror_present: mirror_present?,
                input: input?,
                steps: steps?,
            })
        }
        Kind::WeakValue => {
            let mirror_present = r.get_opt("mirror_present", true, parse_bool);
            let default: Vec<f64> = (0..6).map(|k| f64::from(k) * PI / 12.0).collect();
            let betas = r.get_opt("beta", default, |s| parse_real_list(s, check_closed_angle));
            Some(Experiment::WeakValue {
                half_cycles: half_cycles?,
                mirror_present: mirror_present?,
                betas: betas?,
            })
        }
        Kind::Homodyne => {
            let list = r.get_opt("N", vec![10], |s| {
                let values = parse_int_list(s)?;
                if values.contains(&0) {
                    return Err("must be positive integers".into());
                }
                values
                    .into_iter()
                    .map(|v| u32::try_from(v).map_err(|_| format!("{v} is too large")))
                    .collect()
            });
            Some(Experiment::Homodyne { half_cycles: list? })
        }
        Kind::PerturbScan => {
            let default = (0..9).map(|k| f64::from(k) * PI / 64.0).collect();
            let deltas = r.get_opt("delta", default, |s| parse_real_list(s, check_open_angle));
            let policy = r.get_opt("mu_policy", "fixed".to_string(), |s| Ok(s.to_string()));
            let mu = r.get_opt("mu", 1.0, |s| parse_real(s).and_then(check_unit));
            let shots = r.required("shots", parse_shots);
            let policy = match policy?.as_str() {
                "fixed" => MuPolicy::Fixed(mu?),
                other => {
                    let policy = match other {
                        "tan-delta" => MuPolicy::TanDelta,
                        "tuned" => MuPolicy::WeakValueTuned,
                        _ => {
                            r.error("mu_policy", "expected `fixed`, `tan-delta` or `tuned`");
                            return None;
                        }
                    };
                    if r.present("mu") {
                        r.error("mu", "only used with `mu_policy = fixed`");
                        return None;
                    }
                    policy
                }
            };
            let (n, deltas) = (half_cycles?, deltas?);
            let mut ok = true;
            for &delta in &deltas {
                let checked = policy
                    .mu(delta, n)
                    .and_then(|mu| PerturbationParams::new(delta, mu, n));
                if let Err(e) = checked {
                    r.core(e);
                    ok = false;
                }
            }
            if deltas.is_empty() {
                r.error("delta", "scan grid is empty");
                ok = false;
            }
            ok.then_some(())?;
            Some(Experiment::PerturbScan {
                half_cycles: n,
                deltas,
                policy,
                shots: shots?,
            })
        }
        Kind::MonteCarlo => {
            let mirror_present = r.get_opt("mirror_present", true, parse_bool);
            let delta = r.get_opt("delta", PI / 8.0, |s| {
                parse_real(s).and_then(check_open_angle)
            });
            let mu = r.get_opt("mu", 1.0, |s| parse_real(s).and_then(check_unit));
            let shots = r.required("shots", parse_shots);
            let params = match PerturbationParams::new(delta?, mu?, half_cycles?) {
                Ok(p) => p.with_mirror(mirror_present?),
                Err(e) => {
                    r.core(e);
                    return None;
                }
            };
            Some(Experiment::MonteCarlo {
                params,
                shots: shots?,
            })
        }
        Kind::Pointer => {
            let mirror_present = r.get_opt("mirror_present", true, parse_bool);
            let alpha = r.get_opt("alpha", FRAC_PI_4, |s| {
                parse_real(s).and_then(check_closed_angle)
            });
            let beta = r.get_opt("beta", 0.0, |s| parse_real(s).and_then(check_closed_angle));
            let pointer = read_pointer(r, alpha, beta);
            let h_polariser = r.get_opt("h_polariser", false, parse_bool);
            Some(Experiment::Pointer {
                pointer: pointer?,
                half_cycles: half_cycles?,
                mirror_present: mirror_present?,
                h_polariser: h_polariser?,
            })
        }
        Kind::ProjectorProfile => {
            let pointer = read_pointer(r, Some(FRAC_PI_4), Some(0.0));
            // an invalid N is already reported; skip the range check then
            let limit = half_cycles.map_or(u64::MAX, |n| 2 * u64::from(n));
            let steps = r.get_opt("n", vec![half_cycles.unwrap_or(0) as usize], |s| {
                let steps = parse_int_list(s)?;
                match steps.iter().find(|&&k| k > limit) {
                    Some(k) => Err(format!("step {k} exceeds 2N = {limit}")),
                    None => Ok(steps.into_iter().map(|k| k as usize).collect()),
                }
            });
            let w0 = pointer.map_or(1.0, |p| p.w0);
            let default = linspace(-3.0 * w0, 3.0 * w0, 121);
            let ys = r.get_opt("y", default, |s| parse_real_list(s, Ok));
            Some(Experiment::ProjectorProfile {
                pointer: pointer?,
                half_cycles: half_cycles?,
                steps: steps?,
                ys: ys?,
            })
        }
    }
}

fn read_pointer(
    r: &mut Reader<'_>,
    alpha: Option<f64>,
    beta: Option<f64>,
) -> Option<GaussianPointer> {
    let a = r.get_opt("a", 0.01, |s| {
        parse_real(s).and_then(|v| {
            if v >= 0.0 {
                Ok(v)
            } else {
                Err("must be non-negative".into())
            }
        })
    });
    let w0 = r.get_opt("w0", 1.0, |s| {
        parse_real(s).and_then(|v| {
            if v > 0.0 {
                Ok(v)
            } else {
                Err("must be positive".into())
            }
        })
    });
    let half_width = r.lookup("grid_half_width", parse_real);
    let samples = r.lookup("grid_samples", |s| {
        parse_count(s).and_then(|v| {
            if v >= 3 {
                Ok(v as usize)
            } else {
                Err("need at least 3 samples".into())
            }
        })
    });
    let mut pointer = GaussianPointer {
        w0: w0?,
        a: a?,
        alpha: alpha?,
        beta: beta?,
        grid: None,
    };
    let default = pointer.grid();
    if half_width.is_some() || samples.is_some() {
        pointer.grid = Some(Grid {
            half_width: half_width.unwrap_or(Some(default.half_width))?,
            samples: samples.unwrap_or(Some(default.samples))?,
        });
    }
    match pointer.validate() {
        Ok(()) => Some(pointer),
        Err(e) => {
            r.core(e);
            None
        }
    }
}

fn parse_half_cycles(s: &str) -> Result<u32, String> {
    let n = parse_count(s)?;
    if n == 0 {
        return Err("must be a positive integer".into());
    }
    u32::try_from(n).map_err(|_| format!("{n} is too large"))
}

fn parse_shots(s: &str) -> Result<u64, String> {
    match parse_count(s)? {
        0 => Err("must be at least 1".into()),
        n => Ok(n),
    }
}

/// Non-negative integer; `1e6` style is accepted when exact.
fn parse_count(s: &str) -> Result<u64, String> {
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    match s.parse::<f64>() {
        Ok(v) if v >= 0.0 && v.fract() == 0.0 && v <= 9_007_199_254_740_992.0 => Ok(v as u64),
        _ => Err(format!("expected a non-negative integer, got `{s}`")),
    }
}

fn parse_bool(s: &str) -> Result<bool, String> {
    match s.to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(format!("expected true or false, got `{s}`")),
    }
}

fn check_unit(v: f64) -> Result<f64, String> {
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(format!("{v} is outside [0, 1]"))
    }
}

fn check_closed_angle(v: f64) -> Result<f64, String> {
    if (0.0..=FRAC_PI_2).contains(&v) {
        Ok(v)
    } else {
        Err(format!("{v} is outside [0, pi/2]"))
    }
}

fn check_open_angle(v: f64) -> Result<f64, String> {
    if (0.0..FRAC_PI_2).contains(&v) {
        Ok(v)
    } else {
        Err(format!("{v} is outside [0, pi/2)"))
    }
}

fn parse_factor(s: &str) -> Result<f64, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty factor".into());
    }
    if let Some(coef) = s.strip_suffix("pi").or_else(|| s.strip_suffix('π')) {
        let coef = coef.trim();
        let k = match coef {
            "" | "+" => 1.0,
            "-" => -1.0,
            c => c.parse::<f64>().map_err(|_| format!("bad number `{c}`"))?,
        };
        return Ok(k * PI);
    }
    s.parse::<f64>().map_err(|_| format!("bad number `{s}`"))
}

fn parse_product(s: &str) -> Result<f64, String> {
    s.split('*')
        .map(parse_factor)
        .try_fold(1.0, |acc, f| Ok(acc * f?))
}

/// Real number with optional `pi` factors, one `/` and a `deg` suffix.
pub fn parse_real(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let (body, scale) = match s.strip_suffix("deg") {
        Some(b) => (b, PI / 180.0),
        None => (s, 1.0),
    };
    let v = match body.split_once('/') {
        Some((num, den)) => {
            let d = parse_product(den)?;
            if d == 0.0 {
                return Err("division by zero".into());
            }
            parse_product(num)? / d
        }
        None => parse_product(body)?,
    } * scale;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

fn linspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![start],
        _ => (0..count)
            .map(|i| {
                let t = i as f64 / (count - 1) as f64;
                if i == count - 1 {
                    stop
                } else {
                    start + (stop - start) * t
                }
            })
            .collect(),
    }
}

pub fn parse_real_list(
    s: &str,
    check: impl Fn(f64) -> Result<f64, String>,
) -> Result<Vec<f64>, String> {
    let mut out = Vec::new();
    for item in s.split(',') {
        let parts: Vec<&str> = item.split(':').collect();
        match parts.as_slice() {
            [single] => out.push(parse_real(single)?),
            [start, stop, count] => {
                let n = parse_count(count.trim())?;
                if n == 0 || n > 1_000_000 {
                    return Err(format!("grid count {n} outside 1..=1000000"));
                }
                out.extend(linspace(parse_real(start)?, parse_real(stop)?, n as usize));
            }
            _ => {
                return Err(format!(
                    "expected a value or start:stop:count, got `{}`",
                    item.trim()
                ))
            }
        }
    }
    out.into_iter().map(check).collect()
}

pub fn parse_int_list(s: &str) -> Result<Vec<u64>, String> {
    let mut out = Vec::new();
    for item in s.split(',') {
        match item.split_once(':') {
            None => out.push(parse_count(item.trim())?),
            Some((a, b)) => {
                let (a, b) = (parse_count(a.trim())?, parse_count(b.trim())?);
                if b < a || b - a > 1_000_000 {
                    return Err(format!("bad range {a}:{b}"));
                }
                out.extend(a..=b);
            }
        }
    }
    Ok(out)
}

//! Job-file parsing: a JSON object with the presentation, the four section
//! coordinate vectors, and optional seed / order / step-cap settings.

use grplane_core::bundle::Presentation;
use grplane_core::monomial::MonomialOrder;
use grplane_core::parse::parse_poly;
use grplane_core::plucker::SectionQuadruple;
use grplane_core::poly::Ring;
use grplane_core::rat::{parse_rat, Rat};
use serde::Deserialize;

use crate::diag::{CliError, Code};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobFile {
    pub variables: Vec<String>,
    pub presentation: PresentationSpec,
    pub sections: Vec<Vec<RatValue>>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub order: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationSpec {
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "Q")]
    pub q: String,
}

/// Rational literals come in as integers or "p/q" strings.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum RatValue {
    Int(i64),
    Text(String),
}

impl RatValue {
    fn to_rat(&self) -> Result<Rat, CliError> {
        match self {
            RatValue::Int(n) => Ok(Rat::from_integer((*n).into())),
            RatValue::Text(s) => parse_rat(s)
                .map_err(|e| CliError::new(Code::SyntaxError, format!("bad rational `{s}`: {e}"))),
        }
    }
}

/// A fully validated job: presentation, quadruple, seed, and report order.
pub struct Job {
    pub presentation: Presentation,
    pub quadruple: SectionQuadruple,
    pub seed: u64,
    pub order: MonomialOrder,
}

pub fn load_job(path: &std::path::Path) -> Result<Job, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        CliError::new(
            Code::IoError,
            format!("cannot read {}: {e}", path.display()),
        )
    })?;
    let file: JobFile = serde_json::from_str(&text)
        .map_err(|e| CliError::new(Code::JsonError, format!("invalid job file: {e}")))?;
    job_from_file(file)
}

pub fn job_from_file(file: JobFile) -> Result<Job, CliError> {
    if file.variables.len() != 3 {
        return Err(CliError::new(
            Code::ShapeError,
            "exactly three variables are required",
        ));
    }
    let ring = Ring::new(file.variables.clone());
    let parse = |text: &str| {
        parse_poly(text, &ring)
            .map_err(|e| CliError::new(Code::from_core(&e), format!("in `{text}`: {e}")))
    };
    let a = parse(&file.presentation.a)?;
    let b = parse(&file.presentation.b)?;
    let q = parse(&file.presentation.q)?;
    let presentation = Presentation::new(a, b, q).map_err(CliError::from_core_error)?;
    if file.sections.len() != 4 || file.sections.iter().any(|row| row.len() != 5) {
        return Err(CliError::new(
            Code::ShapeError,
            "sections must be a 4 x 5 coordinate matrix",
        ));
    }
    let mut coords: Vec<[Rat; 5]> = Vec::with_capacity(4);
    for row in &file.sections {
        let mut out: Vec<Rat> = Vec::with_capacity(5);
        for v in row {
            out.push(v.to_rat()?);
        }
        coords.push(out.try_into().expect("five entries"));
    }
    let coords: [[Rat; 5]; 4] = coords.try_into().expect("four rows");
    let quadruple =
        SectionQuadruple::from_coords(&presentation, &coords).map_err(CliError::from_core_error)?;
    let order = match file.order.as_deref() {
        None | Some("grevlex") => MonomialOrder::GrevLex,
        Some("lex") => MonomialOrder::Lex,
        Some(other) => {
            return Err(CliError::new(
                Code::ShapeError,
                format!("unknown order `{other}` (grevlex|lex)"),
            ));
        }
    };
    Ok(Job {
        presentation,
        quadruple,
        seed: file.seed,
        order,
    })
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyPointSet,

    #[error("scale below resolution: r = {r:.3e}, floor = {floor:.3e}")]
    ScaleBelowResolution { r: f64, floor: f64 },

    #[error("porosity scale below resolution: eps*r = {er:.3e}, floor = {floor:.3e}")]
    PorosityScaleBelowResolution { er: f64, floor: f64 },

    #[error("empty ball at ({x:.4}, {y:.4}), r = {r:.3e}")]
    EmptyBall { x: f64, y: f64, r: f64 },

    #[error("measure construction stuck: {0}")]
    MeasureConstructionStuck(String),

    #[error("degenerate regression: {0}")]
    DegenerateRegression(String),

    #[error("not enough scales: have {have}, need {need}")]
    NotEnoughScales { have: usize, need: usize },

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("data format error: {0}")]
    DataFormat(String),

    #[error("missing report section: {0}")]
    MissingSection(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 for usage/data errors, 3 for
    /// internal assertion failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::MeasureConstructionStuck(_) | Error::DegenerateRegression(_) => 3,
            _ => 2,
        }
    }
}

//! Prior-fitted clustering.
//!
//! A small transformer is trained offline on synthetic clustering tasks drawn
//! from a Gaussian-mixture prior. At inference time the trained model clusters
//! a real dataset in one forward pass: `k` pre-clustered anchor points enter
//! as labeled tokens, every remaining point attends to them, and the output
//! head emits a per-point distribution over cluster labels.
//!
//! Crate layout:
//!
//! * [`numkernel`] — dense matrix ops with reverse-mode gradients (the tape).
//! * [`prior`] — hypothesis / task sampling and the exact posterior oracle.
//! * [`model`] — the transformer itself plus checkpoint IO.
//! * [`training`] — cross-entropy loss, Adam, and the training loop.
//! * [`inference`] — context-driven clustering and the k=0 bootstrap.
//! * [`baselines`] — k-means++, Ward, DBSCAN.
//! * [`metrics`] — V-measure, ARI, Hungarian accuracy, wall-clock timing.
//! * [`data`] — toy generators, MNIST IDX ingestion, PCA, subsampling.
//! * [`bench`] — the experiment harness (suite, k-sweep, stability probe).

pub mod baselines;
pub mod bench;
pub mod data;
pub mod error;
pub mod inference;
pub mod metrics;
pub mod model;
pub mod numkernel;
pub mod prior;
pub mod threads;
pub mod training;

pub use error::{Error, Result};
pub use inference::{ClusterContext, ClusterResult};
pub use metrics::MetricsReport;
pub use model::{AttentionMask, ModelConfig, PfnModel};
pub use numkernel::{Matrix, Scalar, Tape};
pub use prior::{GmmHypothesis, PriorConfig, SyntheticTask};
pub use training::TrainConfig;

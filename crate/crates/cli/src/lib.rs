//! Instance ingestion, seeded corpora, command dispatch and reports for the
//! `abc` binary.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod instance;
pub mod report;

pub use commands::{corpus_run, run_command, verify_all, Command, Options, Outcome};
pub use corpus::{generate_corpus, mixed_corpus, Coprimality, CorpusSpec};
pub use error::CliError;
pub use instance::{parse_documents, parse_instance, Instance, Params};
pub use report::Format;

//! Support code for the command-line tool and the test suites: seeded graph
//! generators, the edge-list text format, brute-force oracles, correctness
//! sweeps and wall-clock scaling measurements.

pub mod bench;
pub mod edgelist;
pub mod generate;
pub mod oracle;
pub mod verify;

pub use bench::{bench, fit_log_log, read_csv, write_csv, Algorithm, BenchRecord, SlopeFit};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use generate::{generate, GeneratorSpec, Model};
pub use oracle::{oracle_mst_weight, oracle_shortest_path};
pub use verify::{verify, Suite, VerifyReport};

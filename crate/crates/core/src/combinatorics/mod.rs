//! Words, tableaux, tabloids and the Robinson–Schensted correspondence.

mod rs;
mod tableau;
mod tabloid;
mod word;

pub use rs::{insertion_tableau, is_yamanouchi, plactic_equiv, row_insert, rs, rs_inverse, RsPair};
pub use tableau::{
    column_superstandard, semistandard_tableaux, semistandard_with_content, standard_tableaux,
    yamanouchi_tableau, Partition, Tableau,
};
pub use tabloid::{b_sigma_labels, column_reading, columns_of_size, enumerate_tabloids, Tabloid};
pub use word::Word;

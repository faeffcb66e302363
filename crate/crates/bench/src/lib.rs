//! Shared fixture builders for the benchmarks.

use std::sync::Arc;

use whq_core::exactlin::FieldSpec;
use whq_core::generators::{
    chein_double, group_algebra, groupoid_algebra, loop_algebra, CayleyTable, FiniteGroupoid,
};
use whq_core::whq::WeakHopfQuasigroup;

pub fn s3() -> Arc<WeakHopfQuasigroup> {
    Arc::new(group_algebra(&CayleyTable::symmetric_group(3), FieldSpec::Q).unwrap())
}

pub fn chein_s3() -> Arc<WeakHopfQuasigroup> {
    let table = chein_double(&CayleyTable::symmetric_group(3)).unwrap();
    Arc::new(loop_algebra(&table, FieldSpec::Q).unwrap())
}

pub fn discrete3() -> Arc<WeakHopfQuasigroup> {
    Arc::new(groupoid_algebra(&FiniteGroupoid::discrete(3), FieldSpec::Q).unwrap())
}

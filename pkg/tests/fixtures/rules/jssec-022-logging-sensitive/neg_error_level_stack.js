function escalateFailure(failure) {
  console.error("sync failed", failure.stack);
  throw failure;
}
escalateFailure(buildFailure());

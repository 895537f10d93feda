function auditSync(outcome) {
  logger.info("sync finished", outcome);
  metrics.increment("sync.count");
}
auditSync(true);

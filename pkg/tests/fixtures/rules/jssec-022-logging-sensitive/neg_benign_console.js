function logRollout(step, count) {
  console.log("rollout step", step, "migrated", count);
}
logRollout("phase-2", 1842);

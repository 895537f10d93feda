startPipeline("nightly")
  .then((plan) => expandPlan(plan))
  .then((tasks) => runTasks(tasks))
  .then((results) => summarize(results));

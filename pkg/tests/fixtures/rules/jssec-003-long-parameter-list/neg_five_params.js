function scheduleJob(name, cron, handler, priority, enabled) {
  return { name: name, cron: cron, handler: handler, priority: priority, enabled: enabled };
}
scheduleJob("sync", "* * * * *", Function.prototype, 1, true);

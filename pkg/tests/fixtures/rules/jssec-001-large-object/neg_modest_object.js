var mailDefaults = {
  sender: "noreply@example.test",
  subjectPrefix: "[app]",
  retryCount: 2,
  batchSize: 40,
  throttleMillis: 150
};
sendBatch(mailDefaults);

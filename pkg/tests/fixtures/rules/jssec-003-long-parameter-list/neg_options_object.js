function connectQueue(queueName, options) {
  return { queue: queueName, options: options };
}
connectQueue("billing", { prefetch: 5, durable: true, retryDelay: 200 });

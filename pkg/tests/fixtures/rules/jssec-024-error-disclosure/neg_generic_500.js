function guardedHandler(req, res) {
  try {
    res.json(processOrder(req.body));
  } catch (orderErr) {
    notifyOps(orderErr);
    res.status(500).send("order processing failed");
  }
}
registerHandler(guardedHandler);

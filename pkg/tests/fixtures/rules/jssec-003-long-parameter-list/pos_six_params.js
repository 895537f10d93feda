function createInvoice(customer, items, discount, taxRate, dueDate, noteText) {
  return [customer, items, discount, taxRate, dueDate, noteText];
}
createInvoice("acme", [], 0, 0.2, "2024-01-01", "");

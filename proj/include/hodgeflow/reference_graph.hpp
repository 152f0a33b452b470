// Embedded copy of data/reference_ecommerce.json. The two must stay in
// sync; a unit test compares them structurally.

#ifndef HODGEFLOW_REFERENCE_GRAPH_HPP
#define HODGEFLOW_REFERENCE_GRAPH_HPP

namespace hodgeflow {

inline constexpr const char* kReferenceEcommerceDocument = R"hfjson(
{
  "name": "reference-ecommerce",
  "version": "1",
  "notes": "Serverless e-commerce service graph: AWS-Lambda-style function catalog with an API/auth/routing entry chain, three saga 2-cells (checkout, cart, fulfillment), an unmanaged compensation loop that is deliberately not bounded by any face, and two isolated cron functions. The edge syncInventory->processPayment closes the compensation loop back into the payment path; that closing edge is a reconstruction choice.",
  "vertices": [
    {"id": "apiGateway", "label": "API gateway entry point"},
    {"id": "auth", "label": "Authentication and authorization"},
    {"id": "router", "label": "Routing and orchestration"},
    {"id": "getProducts", "label": "Product list"},
    {"id": "getProductDetail", "label": "Product detail"},
    {"id": "searchProducts", "label": "Product search"},
    {"id": "updateInventory", "label": "Inventory management"},
    {"id": "addToCart", "label": "Add to cart"},
    {"id": "getCart", "label": "View cart"},
    {"id": "updateCart", "label": "Modify cart"},
    {"id": "clearCart", "label": "Clear cart"},
    {"id": "initiateCheckout", "label": "Start checkout"},
    {"id": "processPayment", "label": "Process payment"},
    {"id": "validatePayment", "label": "Validate payment"},
    {"id": "handlePaymentWebhook", "label": "Payment webhook handler"},
    {"id": "createOrder", "label": "Create order"},
    {"id": "getOrderHistory", "label": "Order history"},
    {"id": "getOrderStatus", "label": "Order status"},
    {"id": "cancelOrder", "label": "Cancel order"},
    {"id": "processOrderFulfillment", "label": "Order fulfillment"},
    {"id": "sendOrderConfirmation", "label": "Order confirmation email"},
    {"id": "updateRecommendations", "label": "Update recommendations"},
    {"id": "syncInventory", "label": "Inventory synchronization"},
    {"id": "generateDailyReports", "label": "Daily reports (isolated cron job)"},
    {"id": "cleanupExpiredCarts", "label": "Expired cart cleanup"},
    {"id": "backupDatabase", "label": "Database backup (isolated cron job)"},
    {"id": "logUserActivity", "label": "Activity tracking"},
    {"id": "generateAnalytics", "label": "Analytics generation"},
    {"id": "abTestHandler", "label": "A/B test management"},
    {"id": "adminProductCRUD", "label": "Product administration"},
    {"id": "viewSystemMetrics", "label": "System metrics"},
    {"id": "processBulkUpload", "label": "Bulk upload"}
  ],
  "edges": [
    {"id": "apiGateway->auth", "tail": "apiGateway", "head": "auth", "label": "ingress traffic"},
    {"id": "auth->router", "tail": "auth", "head": "router", "label": "authenticated routing"},
    {"id": "router->getProducts", "tail": "router", "head": "getProducts", "label": "catalog request"},
    {"id": "router->getProductDetail", "tail": "router", "head": "getProductDetail", "label": "catalog request"},
    {"id": "router->searchProducts", "tail": "router", "head": "searchProducts", "label": "catalog request"},
    {"id": "router->addToCart", "tail": "router", "head": "addToCart", "label": "cart request"},
    {"id": "router->getCart", "tail": "router", "head": "getCart", "label": "cart request"},
    {"id": "router->updateCart", "tail": "router", "head": "updateCart", "label": "cart request"},
    {"id": "router->clearCart", "tail": "router", "head": "clearCart", "label": "cart request"},
    {"id": "router->initiateCheckout", "tail": "router", "head": "initiateCheckout", "label": "checkout request"},
    {"id": "router->getOrderHistory", "tail": "router", "head": "getOrderHistory", "label": "order request"},
    {"id": "router->getOrderStatus", "tail": "router", "head": "getOrderStatus", "label": "order request"},
    {"id": "router->cancelOrder", "tail": "router", "head": "cancelOrder", "label": "user-initiated cancellation"},
    {"id": "router->adminProductCRUD", "tail": "router", "head": "adminProductCRUD", "label": "admin request"},
    {"id": "router->viewSystemMetrics", "tail": "router", "head": "viewSystemMetrics", "label": "admin request"},
    {"id": "router->processBulkUpload", "tail": "router", "head": "processBulkUpload", "label": "admin request"},
    {"id": "router->abTestHandler", "tail": "router", "head": "abTestHandler", "label": "experiment assignment"},
    {"id": "apiGateway->handlePaymentWebhook", "tail": "apiGateway", "head": "handlePaymentWebhook", "label": "provider webhook ingress"},
    {"id": "handlePaymentWebhook->validatePayment", "tail": "handlePaymentWebhook", "head": "validatePayment", "label": "asynchronous payment validation"},
    {"id": "initiateCheckout->processPayment", "tail": "initiateCheckout", "head": "processPayment", "label": "checkout saga"},
    {"id": "processPayment->validatePayment", "tail": "processPayment", "head": "validatePayment", "label": "checkout saga"},
    {"id": "validatePayment->createOrder", "tail": "validatePayment", "head": "createOrder", "label": "checkout saga"},
    {"id": "initiateCheckout->createOrder", "tail": "initiateCheckout", "head": "createOrder", "label": "checkout saga closing edge"},
    {"id": "addToCart->getCart", "tail": "addToCart", "head": "getCart", "label": "cart saga"},
    {"id": "getCart->updateCart", "tail": "getCart", "head": "updateCart", "label": "cart saga"},
    {"id": "addToCart->updateCart", "tail": "addToCart", "head": "updateCart", "label": "cart saga closing edge"},
    {"id": "createOrder->processOrderFulfillment", "tail": "createOrder", "head": "processOrderFulfillment", "label": "fulfillment saga"},
    {"id": "processOrderFulfillment->sendOrderConfirmation", "tail": "processOrderFulfillment", "head": "sendOrderConfirmation", "label": "fulfillment saga"},
    {"id": "createOrder->sendOrderConfirmation", "tail": "createOrder", "head": "sendOrderConfirmation", "label": "fulfillment saga closing edge"},
    {"id": "processPayment->cancelOrder", "tail": "processPayment", "head": "cancelOrder", "label": "compensation loop"},
    {"id": "cancelOrder->updateInventory", "tail": "cancelOrder", "head": "updateInventory", "label": "compensation loop"},
    {"id": "updateInventory->syncInventory", "tail": "updateInventory", "head": "syncInventory", "label": "compensation loop"},
    {"id": "syncInventory->processPayment", "tail": "syncInventory", "head": "processPayment", "label": "compensation loop closing edge (reconstruction choice)"},
    {"id": "getProducts->logUserActivity", "tail": "getProducts", "head": "logUserActivity", "label": "activity event"},
    {"id": "searchProducts->logUserActivity", "tail": "searchProducts", "head": "logUserActivity", "label": "activity event"},
    {"id": "logUserActivity->generateAnalytics", "tail": "logUserActivity", "head": "generateAnalytics", "label": "analytics pipeline"},
    {"id": "generateAnalytics->updateRecommendations", "tail": "generateAnalytics", "head": "updateRecommendations", "label": "analytics pipeline"},
    {"id": "cleanupExpiredCarts->clearCart", "tail": "cleanupExpiredCarts", "head": "clearCart", "label": "scheduled cart cleanup"},
    {"id": "adminProductCRUD->updateInventory", "tail": "adminProductCRUD", "head": "updateInventory", "label": "inventory administration"}
  ],
  "faces": [
    {
      "id": "saga_checkout",
      "label": "checkout saga",
      "boundary": [
        {"edge": "initiateCheckout->processPayment", "sign": 1},
        {"edge": "processPayment->validatePayment", "sign": 1},
        {"edge": "validatePayment->createOrder", "sign": 1},
        {"edge": "initiateCheckout->createOrder", "sign": -1}
      ]
    },
    {
      "id": "saga_cart",
      "label": "cart workflow saga",
      "boundary": [
        {"edge": "addToCart->getCart", "sign": 1},
        {"edge": "getCart->updateCart", "sign": 1},
        {"edge": "addToCart->updateCart", "sign": -1}
      ]
    },
    {
      "id": "saga_fulfillment",
      "label": "order fulfillment saga",
      "boundary": [
        {"edge": "createOrder->processOrderFulfillment", "sign": 1},
        {"edge": "processOrderFulfillment->sendOrderConfirmation", "sign": 1},
        {"edge": "createOrder->sendOrderConfirmation", "sign": -1}
      ]
    }
  ]
}
)hfjson";

}  // namespace hodgeflow

#endif  // HODGEFLOW_REFERENCE_GRAPH_HPP

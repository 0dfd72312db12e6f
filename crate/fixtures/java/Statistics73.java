public class Statistics73 {
    static final int LIMIT = 99;

    static void countDown(int remaining) {
        do {
            System.out.println(remaining);
            remaining--;
            } while (remaining > 0);
            System.out.println("Go!");
        }

    static int fibonacci(int num) {
        int prev = 0;
        int curr = 1;
        for (int idx = 0; idx < num; idx++) {
            int next = prev + curr;
            prev = curr;
            curr = next;
        }
        return prev;
    }

    public static void pattern(int size) {
        for (int row = 1; row <= size; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    public static double average(int[] values) {
        double total = 0;
        for (int v : values) {
            total = total + v;
        }
        return total / values.length;
    }

    public static int find(int[] values, int wanted) {
        for (int idx = 0; idx < values.length; idx++) {
            if (values[idx] == wanted) {
                return idx;
            }
        }
        return -1;
    }

    public static void main(String[] args) {
        int[] numbers = {4, 9, 9, 4, 2, 1};
        for (int i = 0; i < LIMIT; i += 10) {
            System.out.println("Step " + i);
        }
        countDown(3);
        System.out.println("Fib: " + fibonacci(16));
        pattern(3);
        double avg = average(numbers);
        System.out.println("Average: " + avg);
        int pos = find(numbers, 1);
        System.out.println("Found at " + pos);
    }
}

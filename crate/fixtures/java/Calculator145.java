public class Calculator145 {
    public static void printTriangle(int size) {
        for (int row = 1; row <= size; row++) {
            for (int col = 0; col < row; col++) {
                System.out.print("*");
            }
            System.out.println();
        }
    }

    public static long fact(int num) {
        if (num <= 1) {
            return 1;
        }
        return num * fact(num - 1);
    }

    public static double computeAverage(int[] nums) {
        double total = 0;
        for (int v : nums) {
            total = total + v;
        }
        return total / nums.length;
    }

    static int maxValue(int[] nums) {
        int max = nums[0];
        for (int k = 1; k < nums.length; k++) {
            if (nums[k] > max) {
                max = nums[k];
            }
        }
        return max;
    }

    public static String backwards(String input) {
        StringBuilder out = new StringBuilder();
        for (int k = input.length() - 1; k >= 0; k--) {
            out.append(input.charAt(k));
        }
        return out.toString();
    }

    public static int totalOf(int[] nums) {
        int total = 0;
        for (int k = 0; k < nums.length; k++) {
            total += nums[k];
        }
        return total;
    }

    static void countDown(int remaining) {
        do {
            System.out.println(remaining);
            remaining--;
            } while (remaining > 0);
            System.out.println("Go!");
        }

    public static void main(String[] args) {
        int[] numbers = {3, 6, 9, 6, 7};
        printTriangle(6);
        System.out.println(fact(11));
        double avg = computeAverage(numbers);
        System.out.println("Average: " + avg);
        int top = maxValue(numbers);
        System.out.println("Max is " + top);
        String rev = backwards("java");
        System.out.println(rev);
        System.out.println("Sum: " + totalOf(numbers));
        countDown(5);
    }
}
